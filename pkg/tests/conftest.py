from fractions import Fraction

import pytest
from hypothesis import strategies as st

from motdt.spectrum import FracPoly, FracRat


def mono(eu, ev, c=1) -> FracPoly:
    return FracPoly.monomial(Fraction(eu), Fraction(ev), c)


def poly(*terms) -> FracPoly:
    """poly((eu, ev, c), ...) -> FracPoly"""
    out = FracPoly.zero()
    for eu, ev, c in terms:
        out = out + mono(eu, ev, c)
    return out


UV = mono(1, 1)
ONE = FracPoly.one()


@pytest.fixture
def uv():
    return UV


_exps = st.integers(-6, 6).flatmap(
    lambda p: st.sampled_from([1, 2, 3, 4]).map(lambda q: Fraction(p, q))
)

st_fracpoly = st.dictionaries(
    st.tuples(_exps, _exps),
    st.integers(-5, 5).filter(lambda c: c != 0),
    max_size=4,
).map(FracPoly)

st_fracpoly_nonzero = st_fracpoly.filter(lambda p: not p.is_zero)

st_fracrat = st.tuples(st_fracpoly, st_fracpoly_nonzero).map(
    lambda t: FracRat(t[0], t[1])
)
