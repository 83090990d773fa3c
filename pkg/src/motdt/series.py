"""Truncated series over the rank-two dimension-vector lattice.

A MotSeries is a finite sum  sum_d  c_d * t^d  over dimension vectors
d = (d0, d1) with d0, d1 >= 0, truncated at total degree
d0 + d1 <= order; coefficients are FracRat spectra.  The plethystic
structure uses the Adams operations psi_n, which act on a series by
scaling coefficient exponents (adams on the FracRat) and dimension
vectors (t^d -> t^{nd}):

    sym(f)  = exp( sum_{n>=1} psi_n(f)/n )      (f with zero constant term)
    plog(F) = the inverse: F = sym(plog(F))     (F with constant term 1)

so Sym(a + b) = Sym(a) Sym(b) and plog recovers the generating input
degree by degree via Moebius-style inversion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import (
    ConstantTermNotOne,
    InvalidParams,
    NonzeroConstantTerm,
    OrderMismatch,
    SupportViolation,
)
from .spectrum import FracPoly, FracRat, lhalf_poly


class DimVector(NamedTuple):
    d0: int
    d1: int

    @property
    def total(self) -> int:
        return self.d0 + self.d1

    def scale(self, n: int) -> "DimVector":
        return DimVector(self.d0 * n, self.d1 * n)

    def plus(self, other: "DimVector") -> "DimVector":
        return DimVector(self.d0 + other.d0, self.d1 + other.d1)

    @property
    def is_zero(self) -> bool:
        return self.d0 == 0 and self.d1 == 0


ZERO_DIM = DimVector(0, 0)


def _as_dim(d) -> DimVector:
    if isinstance(d, DimVector):
        return d
    d0, d1 = d
    return DimVector(int(d0), int(d1))


class MotSeries:
    """Finite truncated series with FracRat coefficients."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs=None):
        if not isinstance(order, int) or order < 0:
            raise InvalidParams(f"series order must be a nonnegative int, got {order}")
        self._order = order
        clean: dict[DimVector, FracRat] = {}
        if coeffs:
            for key, val in coeffs.items():
                d = _as_dim(key)
                if d.d0 < 0 or d.d1 < 0:
                    raise InvalidParams(f"dimension vector {d} has a negative entry")
                if d.total > order:
                    continue
                if isinstance(val, int):
                    val = FracRat.from_int(val)
                elif isinstance(val, Fraction):
                    val = FracRat.from_fraction(val)
                if not isinstance(val, FracRat):
                    raise InvalidParams(f"coefficient at {d} is not a FracRat")
                if not val.is_zero:
                    clean[d] = val
        self._coeffs = clean

    @property
    def order(self) -> int:
        return self._order

    @classmethod
    def zero(cls, order: int) -> "MotSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "MotSeries":
        return cls(order, {ZERO_DIM: FracRat.one()})

    def get(self, d) -> FracRat:
        return self._coeffs.get(_as_dim(d), FracRat.zero())

    def support(self) -> list[DimVector]:
        return sorted(self._coeffs, key=lambda d: (d.total, d.d0))

    def items(self):
        return [(d, self._coeffs[d]) for d in self.support()]

    def _check_order(self, other: "MotSeries"):
        if self._order != other._order:
            raise OrderMismatch(
                f"series orders differ: {self._order} vs {other._order}"
            )

    def __eq__(self, other):
        if not isinstance(other, MotSeries):
            return NotImplemented
        if self._order != other._order:
            return False
        if set(self._coeffs) != set(other._coeffs):
            return False
        return all(self._coeffs[d] == other._coeffs[d] for d in self._coeffs)

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, MotSeries):
            return NotImplemented
        self._check_order(other)
        out = dict(self._coeffs)
        for d, val in other._coeffs.items():
            s = out.get(d)
            s = val if s is None else s + val
            if s.is_zero:
                out.pop(d, None)
            else:
                out[d] = s
        res = MotSeries(self._order)
        res._coeffs = out
        return res

    def __neg__(self):
        res = MotSeries(self._order)
        res._coeffs = {d: -v for d, v in self._coeffs.items()}
        return res

    def __sub__(self, other):
        if not isinstance(other, MotSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FracRat)):
            if isinstance(other, int):
                other = FracRat.from_int(other)
            elif isinstance(other, Fraction):
                other = FracRat.from_fraction(other)
            res = MotSeries(self._order)
            if not other.is_zero:
                res._coeffs = {d: v * other for d, v in self._coeffs.items()}
            return res
        if not isinstance(other, MotSeries):
            return NotImplemented
        self._check_order(other)
        out: dict[DimVector, FracRat] = {}
        for d1, v1 in self._coeffs.items():
            for d2, v2 in other._coeffs.items():
                d = d1.plus(d2)
                if d.total > self._order:
                    continue
                prod = v1 * v2
                s = out.get(d)
                s = prod if s is None else s + prod
                if s.is_zero:
                    out.pop(d, None)
                else:
                    out[d] = s
        res = MotSeries(self._order)
        res._coeffs = out
        return res

    __rmul__ = __mul__

    def psi(self, n: int) -> "MotSeries":
        """Adams operation: adams(n) on coefficients, d -> n*d on support."""
        if not isinstance(n, int) or n < 1:
            raise InvalidParams("psi index must be a positive integer")
        out: dict[DimVector, FracRat] = {}
        for d, v in self._coeffs.items():
            nd = d.scale(n)
            if nd.total <= self._order:
                out[nd] = v.adams(n)
        res = MotSeries(self._order)
        res._coeffs = out
        return res

    def to_json(self) -> dict:
        return {
            "order": self._order,
            "entries": [
                {"d0": d.d0, "d1": d.d1, "coeff": v.to_json()}
                for d, v in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "MotSeries":
        coeffs = {
            DimVector(e["d0"], e["d1"]): FracRat.from_json(e["coeff"])
            for e in data["entries"]
        }
        return cls(int(data["order"]), coeffs)

    def __repr__(self):
        terms = ", ".join(f"{tuple(d)}: {v}" for d, v in self.items()[:4])
        more = "..." if len(self._coeffs) > 4 else ""
        return f"MotSeries(order={self._order}, {{{terms}{more}}})"


def mul(f: MotSeries, g: MotSeries) -> MotSeries:
    return f * g


def _graded_exp(arg: MotSeries) -> MotSeries:
    """exp of a series with zero constant term.

    Degree-graded recursion from the Euler identity tF' = F * tg':
    F_d = (1/|d|) sum_e |e| g_e F_{d-e}, which only ever multiplies a
    coefficient of the (small) argument by one of the result, instead of
    expanding powers of the whole series.
    """
    order = arg.order
    terms = [(d, v) for d, v in arg.items() if not d.is_zero]
    out: dict[DimVector, FracRat] = {ZERO_DIM: FracRat.one()}
    for t in range(1, order + 1):
        for d0 in range(0, t + 1):
            d = DimVector(d0, t - d0)
            acc = FracRat.zero()
            for e, ge in terms:
                if e.d0 <= d.d0 and e.d1 <= d.d1:
                    prev = out.get(DimVector(d.d0 - e.d0, d.d1 - e.d1))
                    if prev is not None:
                        acc = acc + ge * prev * e.total
            if not acc.is_zero:
                out[d] = acc * Fraction(1, t)
    res = MotSeries(order)
    res._coeffs = out
    return res


def _graded_log(F: MotSeries) -> MotSeries:
    """log of a series with constant term 1, by the same graded recursion.

    g_d = F_d - (1/|d|) sum_{e < d} |e| g_e F_{d-e}: every product pairs
    an (already small) log coefficient with a coefficient of F.
    """
    order = F.order
    out: dict[DimVector, FracRat] = {}
    for t in range(1, order + 1):
        for d0 in range(0, t + 1):
            d = DimVector(d0, t - d0)
            acc = FracRat.zero()
            for e, ge in list(out.items()):
                if e.d0 <= d.d0 and e.d1 <= d.d1 and e != d:
                    upper = F.get(DimVector(d.d0 - e.d0, d.d1 - e.d1))
                    if not upper.is_zero:
                        acc = acc + ge * upper * e.total
            val = F.get(d) - acc * Fraction(1, t)
            if not val.is_zero:
                out[d] = val
    res = MotSeries(order)
    res._coeffs = out
    return res


def sym(f: MotSeries) -> MotSeries:
    """Plethystic exponential exp(sum_n psi_n(f)/n).

    Requires zero constant term.  Multiplicative: sym(a + b) = sym(a) * sym(b).
    """
    if not f.get(ZERO_DIM).is_zero:
        raise NonzeroConstantTerm("sym needs a series with zero constant term")
    order = f.order
    arg = MotSeries.zero(order)
    for n in range(1, order + 1):
        arg = arg + f.psi(n) * Fraction(1, n)
    return _graded_exp(arg)


def plog(F: MotSeries) -> MotSeries:
    """Plethystic logarithm: the unique f with sym(f) = F.

    Requires constant term 1.  Computed degree by degree: with
    g = log(F), the relation g = sum_{n >= 1} psi_n(f)/n inverts as
    f_d = g_d - sum_{n >= 2, n | d} adams(n, f_{d/n})/n.
    """
    if not F.get(ZERO_DIM) == FracRat.one():
        raise ConstantTermNotOne("plog needs a series with constant term 1")
    order = F.order
    g = _graded_log(F)
    f: dict[DimVector, FracRat] = {}
    for d in sorted(g.support(), key=lambda d: (d.total, d.d0)):
        if d.is_zero:
            continue
        val = g.get(d)
        c = gcd(d.d0, d.d1)
        for n in range(2, c + 1):
            if c % n == 0:
                prev = f.get(DimVector(d.d0 // n, d.d1 // n))
                if prev is not None:
                    val = val - prev.adams(n) * FracRat.from_fraction(Fraction(1, n))
        if not val.is_zero:
            f[d] = val
    res = MotSeries(order)
    res._coeffs = f
    return res


def bps_normalizer() -> FracRat:
    """hsp(L^{1/2} - L^{-1/2}) = -(uv)^{1/2} + (uv)^{-1/2}."""
    half = FracRat(lhalf_poly())
    return half - half ** (-1)


@dataclass(frozen=True)
class BpsEntry:
    k: int
    value: FracRat
    is_laurent: bool
    laurent: FracPoly | None

    def to_json(self) -> dict:
        out = {"k": self.k, "value": self.value.to_json(), "is_laurent": self.is_laurent}
        if self.laurent is not None:
            out["laurent"] = self.laurent.to_records()
        return out


def extract_bps(F: MotSeries, delta, kmax: int) -> list[BpsEntry]:
    """BPS invariants along the ray of delta.

    F must have constant term 1 and support inside the nonnegative
    multiples of the primitive vector delta.  The k-th invariant is the
    plog coefficient at k*delta times hsp(L^{1/2} - L^{-1/2}); each is
    tested for membership in the integral Laurent subring and the flag
    reported.
    """
    delta = _as_dim(delta)
    if delta.is_zero or gcd(delta.d0, delta.d1) != 1:
        raise InvalidParams(f"delta = {tuple(delta)} must be primitive")
    if kmax < 1 or kmax * delta.total > F.order:
        raise InvalidParams(
            f"kmax = {kmax} exceeds the truncation order {F.order} along {tuple(delta)}"
        )
    if not F.get(ZERO_DIM) == FracRat.one():
        raise ConstantTermNotOne("extract_bps needs constant term 1")
    for d in F.support():
        if d.is_zero:
            continue
        if delta.d1 * d.d0 != delta.d0 * d.d1 or (
            delta.d0 and d.d0 % delta.d0
        ) or (delta.d1 and d.d1 % delta.d1):
            raise SupportViolation(
                f"support point {tuple(d)} is not a multiple of {tuple(delta)}"
            )
    p = plog(F)
    norm = bps_normalizer()
    out = []
    for k in range(1, kmax + 1):
        val = p.get(delta.scale(k)) * norm
        ok, q = val.is_laurent_polynomial()
        out.append(BpsEntry(k=k, value=val, is_laurent=ok, laurent=q))
    return out


def _random_monomial(rng: random.Random) -> FracRat:
    q = rng.choice([1, 1, 1, 2, 3])
    return FracRat(FracPoly.monomial(
        Fraction(rng.randint(-3, 3), q),
        Fraction(rng.randint(-3, 3), q),
        rng.choice([-2, -1, 1, 2]),
    ))


def _random_coeff(rng: random.Random) -> FracRat:
    num = _random_monomial(rng).num
    if rng.random() < 0.2:
        num = num + _random_monomial(rng).num
    if num.is_zero:
        return FracRat.one()
    return FracRat(num)


def _random_zero_const_series(rng: random.Random, order: int, terms: int) -> MotSeries:
    coeffs = {}
    for _ in range(terms):
        d = DimVector(rng.randint(0, order), rng.randint(0, order))
        if d.is_zero or d.total > order:
            continue
        coeffs[d] = _random_coeff(rng)
    return MotSeries(order, coeffs)


def plethystic_law_cases(seed: int, cases: int, max_order: int) -> list[str]:
    """Seeded bulk check of the plethystic laws; returns failure messages.

    Each case draws sparse series with random spectral coefficients
    (fractional exponents included) and verifies plog(sym(a)) == a; on a
    sample of cases it also verifies sym(a + b) == sym(a) * sym(b), and
    that extract_bps returns exactly the BPS input of a one-ray ansatz.
    """
    rng = random.Random(seed)
    failures = []
    norm = bps_normalizer()
    ansatz_rays = [DimVector(1, 0), DimVector(0, 1), DimVector(1, 1), DimVector(1, 2), DimVector(2, 1)]
    for i in range(cases):
        order = rng.randint(2, max_order)
        a = _random_zero_const_series(rng, order, rng.randint(1, 3))
        sa = sym(a)
        if plog(sa) != a:
            failures.append(f"case {i}: plog(sym(a)) != a at order {order}")
        if i % 3 == 0:
            b = _random_zero_const_series(rng, order, rng.randint(1, 2))
            if sym(a + b) != sa * sym(b):
                failures.append(f"case {i}: sym not multiplicative at order {order}")
        if i % 8 == 2:
            delta = rng.choice([d for d in ansatz_rays if d.total <= order])
            kmax = min(3, order // delta.total)
            # monomial draws: fraction denominators stay powers of the
            # normalizer, which the exact-division collapse handles
            bps = [_random_monomial(rng) for _ in range(kmax)]
            ansatz = sym(MotSeries(
                order, {delta.scale(k): bps[k - 1] / norm for k in range(1, kmax + 1)}
            ))
            got = extract_bps(ansatz, delta, kmax)
            if [e.value for e in got] != bps:
                failures.append(
                    f"case {i}: extract_bps did not invert the ansatz on ray {tuple(delta)}"
                )
    return failures
