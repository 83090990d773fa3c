"""Sparse univariate polynomials over Q, used internally.

A polynomial is a dict {exponent: coefficient} with int exponents >= 0,
Fraction coefficients, and no zero values stored.  These are helpers for
weight-fraction reduction, bivariate exact division, and the square-free
and common-root checks of the normal-crossing verifier; they are not part
of the public API.
"""

from __future__ import annotations

from fractions import Fraction

UPoly = dict[int, Fraction]


def unorm(p: dict) -> UPoly:
    return {e: Fraction(c) for e, c in p.items() if c != 0}


def uconst(c) -> UPoly:
    c = Fraction(c)
    return {0: c} if c else {}


def uis_zero(p: UPoly) -> bool:
    return not p


def udeg(p: UPoly) -> int:
    if not p:
        raise ValueError("degree of zero polynomial")
    return max(p)


def uval(p: UPoly) -> int:
    if not p:
        raise ValueError("valuation of zero polynomial")
    return min(p)


def uadd(p: UPoly, q: UPoly) -> UPoly:
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def uneg(p: UPoly) -> UPoly:
    return {e: -c for e, c in p.items()}


def usub(p: UPoly, q: UPoly) -> UPoly:
    return uadd(p, uneg(q))


def umul(p: UPoly, q: UPoly) -> UPoly:
    out: UPoly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def uscale(p: UPoly, c) -> UPoly:
    c = Fraction(c)
    if not c:
        return {}
    return {e: cc * c for e, cc in p.items()}


def ushift(p: UPoly, k: int) -> UPoly:
    return {e + k: c for e, c in p.items()}


def udivmod(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly]:
    """Long division p = quot*q + rem with deg rem < deg q."""
    if uis_zero(q):
        raise ZeroDivisionError("division by zero polynomial")
    quot: UPoly = {}
    rem = dict(p)
    dq = udeg(q)
    lq = q[dq]
    while rem and udeg(rem) >= dq:
        dr = udeg(rem)
        c = rem[dr] / lq
        quot[dr - dq] = c
        for e, cc in q.items():
            e2 = e + dr - dq
            s = rem.get(e2, 0) - c * cc
            if s:
                rem[e2] = s
            else:
                rem.pop(e2, None)
    return quot, rem


def udiv_exact(p: UPoly, q: UPoly) -> UPoly | None:
    """Exact quotient p/q, or None if the division leaves a remainder."""
    quot, rem = udivmod(p, q)
    return quot if uis_zero(rem) else None


def umonic(p: UPoly) -> UPoly:
    if not p:
        return {}
    return uscale(p, 1 / p[udeg(p)])


def ugcd(p: UPoly, q: UPoly) -> UPoly:
    """Monic gcd over Q (a unit gcd comes back as {0: 1})."""
    a, b = dict(p), dict(q)
    while not uis_zero(b):
        _, r = udivmod(a, b)
        a, b = b, r
    if uis_zero(a):
        return {}
    return umonic(a)


def uderiv(p: UPoly) -> UPoly:
    return {e - 1: c * e for e, c in p.items() if e != 0}


def ueval(p: UPoly, x) -> Fraction:
    x = Fraction(x)
    return sum((c * x**e for e, c in p.items()), Fraction(0))


def uis_squarefree(p: UPoly) -> bool:
    """True when p has no repeated root over the complex numbers."""
    if uis_zero(p):
        return False
    if udeg(p) == 0:
        return True
    g = ugcd(p, uderiv(p))
    return udeg(g) == 0


def udistinct_roots(p: UPoly) -> int:
    """Number of distinct complex roots (degree of the square-free part)."""
    if uis_zero(p):
        raise ValueError("root count of zero polynomial")
    if udeg(p) == 0:
        return 0
    g = ugcd(p, uderiv(p))
    return udeg(p) - (udeg(g) if g else 0)


def uhave_common_root(polys: list[UPoly]) -> bool:
    """True when all the given polynomials share a complex root.

    A zero polynomial vanishes everywhere, so it is ignored unless all
    entries are zero (in which case every point is a common root).
    """
    nonzero = [p for p in polys if not uis_zero(p)]
    if not nonzero:
        return True
    g = nonzero[0]
    for p in nonzero[1:]:
        g = ugcd(g, p)
        if not uis_zero(g) and udeg(g) == 0:
            return False
    return uis_zero(g) or udeg(g) > 0


def uprimitive(p: UPoly) -> tuple[Fraction, dict[int, int]]:
    """Write p = content * primitive with integer primitive coefficients.

    The content is a positive rational; the primitive part has coprime
    integer coefficients with positive leading coefficient sign carried by
    the content (so content may be negative only via the caller's choice:
    here the primitive part keeps the sign of p's leading coefficient and
    the content is positive).
    """
    if uis_zero(p):
        return Fraction(0), {}
    from math import gcd, lcm

    den = lcm(*(c.denominator for c in p.values())) if len(p) > 1 else next(iter(p.values())).denominator
    scaled = {e: int(c * den) for e, c in p.items()}
    num = 0
    for c in scaled.values():
        num = gcd(num, abs(c))
    prim = {e: c // num for e, c in scaled.items()}
    return Fraction(num, den), prim
