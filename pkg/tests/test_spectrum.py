from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import ONE, UV, mono, poly, st_fracpoly, st_fracpoly_nonzero, st_fracrat
from motdt.errors import DenominatorVanishes, NonIntegerValue, PoleAtOne
from motdt.spectrum import (
    FracPoly,
    FracRat,
    WeightPoly,
    adams,
    lhalf_poly,
    mu_poly,
)

H = Fraction(1, 2)


class TestFracPoly:
    def test_half_tate_squares_to_uv(self):
        assert lhalf_poly() * lhalf_poly() == UV

    def test_adams_two_of_half_tate(self):
        assert adams(2, lhalf_poly()) == mono(1, 1, -1)

    def test_lhalf_from_mu2(self):
        # L^{1/2} = 1 - [mu_2] at the spectrum level
        assert ONE - mu_poly(2) == lhalf_poly()

    def test_mu_values(self):
        assert mu_poly(1) == ONE
        assert mu_poly(2) == poly((0, 0, 1), (H, H, 1))
        assert mu_poly(3) == poly(
            (0, 0, 1), (Fraction(1, 3), Fraction(2, 3), 1), (Fraction(2, 3), Fraction(1, 3), 1)
        )

    def test_level(self):
        assert ONE.level == 1
        assert mu_poly(6).level == 6
        assert (mu_poly(4) * mu_poly(6)).level == 12

    def test_zero_coefficients_dropped(self):
        assert (mono(1, 1) - mono(1, 1)).is_zero
        assert len(mono(1, 0) + mono(1, 0, -1) + mono(0, 1)) == 1

    def test_records_round_trip(self):
        p = poly((H, -H, 3), (-2, 1, -1), (0, 0, 7))
        assert FracPoly.from_records(p.to_records()) == p
        assert p.to_records() == sorted(p.to_records(), key=lambda r: (Fraction(r["eu"]), Fraction(r["ev"])))

    def test_pow(self):
        assert (ONE + UV) ** 2 == poly((0, 0, 1), (1, 1, 2), (2, 2, 1))
        assert (ONE + UV) ** 0 == ONE

    def test_rejects_non_integer_coefficients(self):
        with pytest.raises(TypeError):
            FracPoly({(0, 0): Fraction(1, 2)})

    @given(a=st_fracpoly, b=st_fracpoly, c=st_fracpoly)
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + FracPoly.zero() == a
        assert a * ONE == a

    @given(a=st_fracpoly, b=st_fracpoly)
    @settings(max_examples=40, deadline=None)
    def test_adams_is_ring_hom(self, a, b):
        assert adams(3, a + b) == adams(3, a) + adams(3, b)
        assert adams(3, a * b) == adams(3, a) * adams(3, b)

    @given(a=st_fracpoly)
    @settings(max_examples=40, deadline=None)
    def test_adams_composes(self, a):
        assert adams(2, adams(3, a)) == adams(6, a)
        assert adams(1, a) == a


class TestFracRat:
    def test_den_normalization(self):
        # denominator -2(uv)^{1/2} + 2uv: lex-least term gets positive
        # coefficient at exponent (0, 0), magnitude preserved
        r = FracRat(ONE, mono(H, H, -2) + mono(1, 1, 2))
        assert r.den.lex_min_term() == ((Fraction(0), Fraction(0)), 2)
        assert r.den == poly((0, 0, 2), (H, H, -2))
        assert r.num == mono(-H, -H, -1)

    def test_monomial_denominator_normalizes_away(self):
        r = FracRat(ONE + UV, mono(H, H, -1))
        assert r.den == ONE
        assert r.num == poly((-H, -H, -1), (H, H, -1))

    def test_cross_multiplication_equality(self):
        a = FracRat(ONE + UV, ONE - UV)
        b = FracRat((ONE + UV) * (ONE + UV), (ONE - UV) * (ONE + UV))
        assert a == b
        assert FracRat(FracPoly.const(2), FracPoly.const(2)) == FracRat.one()

    def test_zero(self):
        z = FracRat(FracPoly.zero(), ONE - UV)
        assert z.is_zero
        assert z == FracRat.zero()
        assert z.den == ONE

    def test_pow_negative(self):
        r = FracRat(lhalf_poly())
        cube = r ** (-3)
        assert cube == FracRat(mono(-Fraction(3, 2), -Fraction(3, 2), -1))

    @given(x=st_fracrat, y=st_fracrat, z=st_fracrat)
    @settings(max_examples=40, deadline=None)
    def test_field_axioms(self, x, y, z):
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z

    @given(x=st_fracrat)
    @settings(max_examples=30, deadline=None)
    def test_division_inverts(self, x):
        if not x.is_zero:
            assert x / x == FracRat.one()
            assert (FracRat.one() / x) * x == FracRat.one()

    def test_json_round_trip(self):
        r = FracRat(ONE + UV, ONE - UV)
        assert FracRat.from_json(r.to_json()) == r


class TestLaurentDecision:
    def test_geometric_quotient(self):
        r = FracRat(ONE - UV**3, ONE - UV)
        ok, q = r.is_laurent_polynomial()
        assert ok
        assert q == ONE + UV + UV**2

    def test_inverse_series_is_not_laurent(self):
        ok, q = FracRat(ONE, ONE - UV).is_laurent_polynomial()
        assert not ok and q is None

    def test_monomial_denominator(self):
        r = FracRat(poly((0, 0, 2), (1, 1, 2)), FracPoly.const(2))
        ok, q = r.is_laurent_polynomial()
        assert ok and q == ONE + UV

    def test_integer_quotients_only(self):
        ok, q = FracRat(FracPoly.const(2), FracPoly.const(4)).is_laurent_polynomial()
        assert not ok and q is None
        ok, q = FracRat(mono(1, 0), poly((0, 0, 1), (1, 1, 2))).is_laurent_polynomial()
        assert not ok

    def test_asymmetric_difference_of_squares(self):
        r = FracRat(mono(2, 0) + mono(0, 2, -1), mono(1, 0) + mono(0, 1, -1))
        ok, q = r.is_laurent_polynomial()
        assert ok
        assert q == mono(1, 0) + mono(0, 1)

    def test_fractional_exponent_quotient(self):
        num = ONE - UV
        den = (ONE - UV) * mono(H, H)
        ok, q = FracRat(num, den).is_laurent_polynomial()
        assert ok
        assert q == mono(-H, -H)

    def test_zero_is_laurent(self):
        ok, q = FracRat.zero().is_laurent_polynomial()
        assert ok and q == FracPoly.zero()

    @given(p=st_fracpoly, d=st_fracpoly_nonzero)
    @settings(max_examples=40, deadline=None)
    def test_products_always_divide_back(self, p, d):
        ok, q = FracRat(p * d, d).is_laurent_polynomial()
        assert ok
        assert q == p


class TestWeightAndEuler:
    def test_weight_reduction(self):
        wt = FracRat(ONE - UV**3, ONE - UV).wt_realize()
        expected = WeightPoly({Fraction(0): 1, Fraction(2): 1, Fraction(4): 1}, {Fraction(0): 1})
        assert wt == expected

    def test_weight_collapse_raises(self):
        with pytest.raises(DenominatorVanishes):
            FracRat(ONE, mono(1, 0) - mono(0, 1)).wt_realize()

    def test_pole_at_one(self):
        with pytest.raises(PoleAtOne):
            FracRat(ONE, ONE - UV).wt_realize().evaluate_at_one()

    def test_non_integer_euler(self):
        with pytest.raises(NonIntegerValue):
            FracRat(ONE, FracPoly.const(2)).euler_realize()

    def test_euler_of_projective_line_twist(self):
        # hsp(L^{-3/2} [P^1]) = -(uv)^{-3/2} (1 + uv) has Euler value -2
        r = FracRat(lhalf_poly()) ** (-3) * FracRat(ONE + UV)
        assert r.euler_realize() == -2

    def test_weight_cancels_before_reduction(self):
        # u^{1/2} v^{-1/2} + u^{-1/2} v^{1/2} collapses to the constant 2
        r = FracRat(mono(H, -H) + mono(-H, H))
        assert r.wt_realize() == 2
        assert r.euler_realize() == 2

    def test_half_integer_weights(self):
        wt = FracRat(mu_poly(2)).wt_realize()
        assert wt.num_terms == {Fraction(0): 1, Fraction(1): 1}
        assert wt.evaluate_at_one() == 2

    @given(x=st_fracrat)
    @settings(max_examples=40, deadline=None)
    def test_euler_is_adams_invariant(self, x):
        try:
            e = x.euler_realize()
        except (DenominatorVanishes, PoleAtOne, NonIntegerValue):
            return
        for n in (2, 3):
            assert adams(n, x).euler_realize() == e

    def test_weight_poly_gcd_reduction_is_canonical(self):
        a = FracRat(poly((0, 0, 2), (1, 1, 2)), poly((0, 0, 2), (2, 2, -2)))
        b = FracRat(ONE + UV, ONE - UV**2)
        assert a.wt_realize() == b.wt_realize()
