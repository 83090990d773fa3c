from fractions import Fraction

import pytest

from conftest import ONE, UV, mono, poly
from motdt.covers import CoverData, cyclic_cover, hsp_cover, hsp_cover_open
from motdt.errors import InvalidParams, UnsupportedDisconnectedCover
from motdt.spectrum import FracRat, mu_poly


def frac(p, q):
    return Fraction(p, q)


class TestCyclicCover:
    def test_trivial_degree_one(self):
        cov = cyclic_cover(1, [5, 7])
        assert (cov.c, cov.g, cov.h01_chars) == (1, 0, ())

    def test_family_cover_a1(self):
        # degree 4, branches (1, 1, 2): chi = 4(2-3) + 1 + 1 + 2 = 0, genus 1
        cov = cyclic_cover(4, [1, 1, 2])
        assert (cov.m, cov.c, cov.g) == (4, 1, 1)
        assert cov.h01_chars == (3,)

    def test_odd_family_closed_form(self):
        # degree 4a cover branched with (1, 2a-1, 2a): genus a, characters
        # 2j-1+2a for j = 1..a
        for a in range(1, 9):
            cov = cyclic_cover(4 * a, [1, 2 * a - 1, 2 * a])
            assert cov.c == 1
            assert cov.g == a
            assert cov.h01_chars == tuple(2 * j - 1 + 2 * a for j in range(1, a + 1))

    def test_even_family_closed_form(self):
        # degree 2b+1 cover branched with (2b-1, 1, 1): genus b, characters b+j
        for b in range(1, 9):
            cov = cyclic_cover(2 * b + 1, [2 * b - 1, 1, 1])
            assert cov.c == 1
            assert cov.g == b
            assert cov.h01_chars == tuple(b + j for j in range(1, b + 1))

    def test_split_over_affine(self):
        cov = cyclic_cover(4, [8])
        assert cov.split_over_affine
        assert (cov.c, cov.g) == (4, 0)

    def test_disconnected_rejected(self):
        with pytest.raises(UnsupportedDisconnectedCover):
            cyclic_cover(4, [2, 2])
        with pytest.raises(UnsupportedDisconnectedCover):
            cyclic_cover(4, [4, 8])
        with pytest.raises(UnsupportedDisconnectedCover):
            cyclic_cover(3, [])

    def test_validation(self):
        with pytest.raises(InvalidParams):
            cyclic_cover(0, [1])
        with pytest.raises(InvalidParams):
            cyclic_cover(3, [0])


class TestHspCover:
    def test_genus_one_cover(self):
        cov = cyclic_cover(4, [1, 1, 2])
        got = hsp_cover(cov)
        expected = FracRat(
            poly(
                (0, 0, 1),
                (1, 1, 1),
                (frac(3, 4), frac(5, 4), -1),
                (frac(5, 4), frac(3, 4), -1),
            )
        )
        assert got == expected

    def test_degree_three_genus_one(self):
        cov = cyclic_cover(3, [1, 1, 1])
        got = hsp_cover(cov)
        expected = FracRat(
            poly(
                (0, 0, 1),
                (1, 1, 1),
                (frac(2, 3), frac(4, 3), -1),
                (frac(4, 3), frac(2, 3), -1),
            )
        )
        assert got == expected

    def test_split_cover(self):
        cov = cyclic_cover(4, [8])
        assert hsp_cover(cov) == FracRat(mu_poly(4) * (ONE + UV))

    def test_euler_matches_genus(self):
        for a in range(1, 7):
            cov = cyclic_cover(4 * a, [1, 2 * a - 1, 2 * a])
            assert hsp_cover(cov).euler_realize() == 2 - 2 * a

    def test_rational_cover(self):
        cov = cyclic_cover(2, [1, 1])
        assert hsp_cover(cov) == FracRat(ONE + UV)


class TestHspCoverOpen:
    def test_split_open_is_affine_times_mu(self):
        # removing the single branch fiber from the split cover leaves
        # mu_{2a} x A^1
        for a in (1, 2, 3):
            cov = cyclic_cover(2 * a, [4 * a])
            got = hsp_cover_open(cov, [2 * a])
            assert got == FracRat(UV * mu_poly(2 * a))

    def test_connected_open(self):
        cov = cyclic_cover(4, [1, 1, 2])
        got = hsp_cover_open(cov, [1, 1, 2])
        assert got == hsp_cover(cov) - FracRat(mu_poly(1)) - FracRat(mu_poly(1)) - FracRat(mu_poly(2))

    def test_validation(self):
        cov = cyclic_cover(2, [1, 1])
        with pytest.raises(InvalidParams):
            hsp_cover_open(cov, [0])


def test_cover_json():
    cov = cyclic_cover(8, [1, 3, 4])
    data = cov.to_json()
    assert data["m"] == 8 and data["c"] == 1
    assert data["chars"] == list(cov.h01_chars)
