from fractions import Fraction

import pytest

from conftest import ONE, UV, mono, poly
from motdt.covers import cyclic_cover
from motdt.errors import InvalidParams
from motdt.motive import MotiveExpr
from motdt.spectrum import FracRat, mu_poly

M = MotiveExpr
H = Fraction(1, 2)


class TestAtomTable:
    def test_one(self):
        assert M.one().realize_hsp() == FracRat.one()

    def test_lefschetz_half(self):
        assert M.lefschetz_half().realize_hsp() == FracRat(mono(H, H, -1))

    def test_lefschetz(self):
        assert M.lefschetz().realize_hsp() == FracRat(UV)

    def test_mu(self):
        for n in (1, 2, 3, 6):
            assert M.mu(n).realize_hsp() == FracRat(mu_poly(n))

    def test_proj_line(self):
        assert M.proj_line().realize_hsp() == FracRat(ONE + UV)

    def test_affine(self):
        assert M.affine(0).realize_hsp() == FracRat.one()
        assert M.affine(3).realize_hsp() == FracRat(mono(3, 3))

    def test_gl(self):
        # [GL_1] = L - 1
        assert M.gl(1).realize_hsp() == FracRat(UV - ONE)
        # [GL_2] = (L^2 - 1)(L^2 - L)
        expected = (UV**2 - ONE) * (UV**2 - UV)
        assert M.gl(2).realize_hsp() == FracRat(expected)

    def test_cover_atom(self):
        cov = cyclic_cover(4, [1, 1, 2])
        expr = M.cover_class(cov)
        from motdt.covers import hsp_cover

        assert expr.realize_hsp() == hsp_cover(cov)
        assert str(expr) == "[D_4]"

    def test_lhalf_is_one_minus_mu2(self):
        lhs = M.lefschetz_half().realize_hsp()
        rhs = (M.one() - M.mu(2)).realize_hsp()
        assert lhs == rhs


class TestAlgebra:
    def test_sum_product_pow(self):
        expr = (M.one() + M.proj_line()) * M.lefschetz()
        assert expr.realize_hsp() == FracRat(UV * (ONE + ONE + UV))

    def test_negative_power_of_lefschetz_half(self):
        expr = M.lefschetz_half() ** (-3)
        assert expr.realize_hsp() == FracRat(mono(-Fraction(3, 2), -Fraction(3, 2), -1))

    def test_negative_power_of_gl(self):
        expr = M.gl(1) ** (-1)
        assert expr.realize_hsp() == FracRat(ONE, UV - ONE)

    def test_negative_power_rejected_elsewhere(self):
        with pytest.raises(InvalidParams):
            M.proj_line() ** (-1)
        with pytest.raises(InvalidParams):
            (M.one() + M.mu(2)) ** (-2)

    def test_integer_coercion(self):
        expr = 2 + M.lefschetz() * 3
        assert expr.realize_hsp() == FracRat(FracPoly_const(2) + UV * 3)


def FracPoly_const(c):
    from motdt.spectrum import FracPoly

    return FracPoly.const(c)


class TestRealizeChain:
    def test_mu3_chain(self):
        hsp, wt, euler = M.mu(3).realize_chain()
        assert hsp == FracRat(mu_poly(3))
        assert wt.num_terms == {Fraction(0): 1, Fraction(1): 2}
        assert euler == 3

    def test_point_sequence_motive(self):
        expr = M.lefschetz_half() ** (-3) * M.proj_line()
        hsp, wt, euler = expr.realize_chain()
        assert hsp == FracRat(mono(-Fraction(3, 2), -Fraction(3, 2), -1) + mono(-H, -H, -1))
        # wt = -s^{-3} - s^{-1}; at s = 1 the Euler value is -2, the
        # chi([P^1]) = 2 shadow twisted by (-1) from hsp(L^{-3/2})
        assert euler == -2


class TestDisplay:
    def test_pretty_forms(self):
        assert str(M.mu(3)) == "[mu_3]"
        assert str(M.lefschetz_half() ** (-2)) == "L^(-1)"
        assert str(M.proj_line()) == "[P1]"
        expr = M.lefschetz_half() ** (-2) * (M.one() - M.cover_class(cyclic_cover(8, [1, 3, 4]), "D_8")) + 2
        s = str(expr)
        assert "L^(-1)" in s and "[D_8]" in s and "+ 2" in s

    def test_json_tree(self):
        expr = (M.one() - M.mu(2)) * M.lefschetz_half() ** 2
        data = expr.to_json()
        assert "prod" in data
