"""Exact arithmetic for equivariant Hodge spectra.

Values live in the ring Z[u^{±1/n}, v^{±1/n} | n >= 1]: finite sums of
monomials u^{e_u} v^{e_v} with rational exponents and integer
coefficients.  Three layers are provided:

* FracPoly    -- such a Laurent polynomial, the additive workhorse;
* FracRat     -- a formal quotient of two FracPolys, compared by
                 cross-multiplication (no bivariate gcd is ever taken);
* WeightPoly  -- the one-variable shadow under u = v = s, stored as a
                 reduced fraction of integer-coefficient Laurent
                 polynomials in s (univariate gcd reduction is allowed
                 and performed here).

The ring maps onward by wt_realize (u = v = s) and euler_realize (s = 1);
adams(n, x) scales every exponent pair by n and is a ring homomorphism.
All arithmetic is exact; no floats appear anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from . import _univar as uv
from .errors import DenominatorVanishes, NonIntegerValue, PoleAtOne

Exp = tuple[Fraction, Fraction]


def _exp(e) -> Fraction:
    if isinstance(e, Fraction):
        return e
    if isinstance(e, int):
        return Fraction(e)
    if isinstance(e, str):
        return Fraction(e)
    raise TypeError(f"bad exponent {e!r}")


class FracPoly:
    """Laurent polynomial in u, v with rational exponents, integer coefficients.

    Internally the exponents are stored as integer pairs at a per-value
    scale K (the true exponent of a key (i, j) is (i/K, j/K), with K kept
    minimal), so the inner loops of addition and multiplication run on
    plain integer tuples.  The public face -- items(), lex_min_term(),
    records, str -- always speaks Fractions.
    """

    __slots__ = ("_t", "_K")

    def __init__(self, terms=None):
        exps: dict[Exp, int] = {}
        if terms:
            for key, c in terms.items():
                if not isinstance(c, int):
                    raise TypeError(f"coefficient {c!r} is not an integer")
                if c == 0:
                    continue
                eu, ev = key
                exps[(_exp(eu), _exp(ev))] = c
        K = 1
        for eu, ev in exps:
            K = lcm(K, eu.denominator, ev.denominator)
        self._t = {
            (int(eu * K), int(ev * K)): c for (eu, ev), c in exps.items()
        }
        self._K = K if self._t else 1

    @classmethod
    def _build(cls, t: dict, K: int) -> "FracPoly":
        """Internal constructor from an integer-key table; reduces K."""
        t = {k: c for k, c in t.items() if c}
        p = cls.__new__(cls)
        if not t:
            p._t = {}
            p._K = 1
            return p
        g = K
        for i, j in t:
            g = gcd(g, i, j)
            if g == 1:
                break
        if g > 1:
            t = {(i // g, j // g): c for (i, j), c in t.items()}
            K //= g
        p._t = t
        p._K = K
        return p

    @classmethod
    def zero(cls) -> "FracPoly":
        return cls()

    @classmethod
    def one(cls) -> "FracPoly":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: int) -> "FracPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, eu, ev, c: int = 1) -> "FracPoly":
        return cls({(eu, ev): c})

    def items(self):
        K = self._K
        return [
            ((Fraction(i, K), Fraction(j, K)), c)
            for (i, j), c in sorted(self._t.items())
        ]

    @property
    def is_zero(self) -> bool:
        return not self._t

    @property
    def level(self) -> int:
        """Least K >= 1 with every K*exponent an integer."""
        return self._K

    def __len__(self):
        return len(self._t)

    def _aligned(self, other: "FracPoly"):
        """Both term tables rescaled to a common level."""
        K1, K2 = self._K, other._K
        if K1 == K2:
            return K1, self._t, other._t
        K = K1 * K2 // gcd(K1, K2)
        s1, s2 = K // K1, K // K2
        t1 = self._t if s1 == 1 else {
            (i * s1, j * s1): c for (i, j), c in self._t.items()
        }
        t2 = other._t if s2 == 1 else {
            (i * s2, j * s2): c for (i, j), c in other._t.items()
        }
        return K, t1, t2

    def __eq__(self, other):
        if isinstance(other, int):
            other = FracPoly.const(other)
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self._K == other._K and self._t == other._t

    def __hash__(self):
        return hash((self._K, frozenset(self._t.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = FracPoly.const(other)
        if not isinstance(other, FracPoly):
            return NotImplemented
        K, t1, t2 = self._aligned(other)
        out = dict(t1)
        for key, c in t2.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return FracPoly._build(out, K)

    __radd__ = __add__

    def __neg__(self):
        res = FracPoly.__new__(FracPoly)
        res._t = {k: -c for k, c in self._t.items()}
        res._K = self._K
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = FracPoly.const(other)
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return FracPoly.zero()
            res = FracPoly.__new__(FracPoly)
            res._t = {k: c * other for k, c in self._t.items()}
            res._K = self._K
            return res
        if not isinstance(other, FracPoly):
            return NotImplemented
        K, t1, t2 = self._aligned(other)
        out: dict = {}
        get = out.get
        for (a1, b1), c1 in t1.items():
            for (a2, b2), c2 in t2.items():
                key = (a1 + a2, b1 + b2)
                s = get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return FracPoly._build(out, K)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("FracPoly powers must be nonnegative integers")
        result = FracPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, deu, dev) -> "FracPoly":
        """Multiply by the monomial u^deu v^dev."""
        deu, dev = _exp(deu), _exp(dev)
        K = lcm(self._K, deu.denominator, dev.denominator)
        s = K // self._K
        di, dj = int(deu * K), int(dev * K)
        return FracPoly._build(
            {(i * s + di, j * s + dj): c for (i, j), c in self._t.items()}, K
        )

    def lex_min_term(self) -> tuple[Exp, int]:
        if self.is_zero:
            raise ValueError("zero polynomial has no terms")
        i, j = min(self._t)
        K = self._K
        return (Fraction(i, K), Fraction(j, K)), self._t[(i, j)]

    def as_monomial(self) -> tuple[Exp, int] | None:
        if len(self._t) == 1:
            (i, j), c = next(iter(self._t.items()))
            K = self._K
            return (Fraction(i, K), Fraction(j, K)), c
        return None

    def adams(self, n: int) -> "FracPoly":
        """Scale every exponent pair (e_u, e_v) to (n e_u, n e_v)."""
        if not isinstance(n, int) or n < 1:
            raise ValueError("adams index must be a positive integer")
        return FracPoly._build(
            {(i * n, j * n): c for (i, j), c in self._t.items()}, self._K
        )

    def weight_terms(self) -> dict[Fraction, int]:
        """Collapse u = v = s: exponent e_u + e_v, coefficients summed."""
        out: dict[Fraction, int] = {}
        K = self._K
        for (i, j), c in self._t.items():
            e = Fraction(i + j, K)
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return out

    def try_divide(self, den: "FracPoly") -> "FracPoly | None":
        """Exact quotient self / den inside the ring, or None.

        None means the quotient either does not exist or has non-integer
        coefficients (e.g. 2 / 4): only divisions landing back in the
        integral subring succeed.
        """
        if den.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return FracPoly.zero()
        K, t1, t2 = self._aligned(den)
        if len(t2) == 1:
            (di, dj), c = next(iter(t2.items()))
            out: dict = {}
            for (i, j), cc in t1.items():
                if cc % c:
                    return None
                out[(i - di, j - dj)] = cc // c
            return FracPoly._build(out, K)
        amu = min(i for i, _ in t1)
        amv = min(j for _, j in t1)
        bmu = min(i for i, _ in t2)
        bmv = min(j for _, j in t2)
        A = {(i - amu, j - amv): c for (i, j), c in t1.items()}
        B = {(i - bmu, j - bmv): c for (i, j), c in t2.items()}
        quot = _bi_divide(A, B)
        if quot is None:
            return None
        du, dv = amu - bmu, amv - bmv
        out = {}
        for (i, j), c in quot.items():
            if c.denominator != 1:
                return None
            out[(i + du, j + dv)] = int(c)
        return FracPoly._build(out, K)

    def to_records(self) -> list[dict]:
        return [
            {"eu": str(a), "ev": str(b), "c": c} for (a, b), c in self.items()
        ]

    @classmethod
    def from_records(cls, records) -> "FracPoly":
        terms: dict[Exp, int] = {}
        for rec in records:
            key = (Fraction(rec["eu"]), Fraction(rec["ev"]))
            terms[key] = terms.get(key, 0) + int(rec["c"])
        return cls(terms)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for (a, b), c in self.items():
            factors = []
            if abs(c) != 1 or (a == 0 and b == 0):
                factors.append(str(abs(c)))
            for name, e in (("u", a), ("v", b)):
                if e == 0:
                    continue
                if e == 1:
                    factors.append(name)
                else:
                    factors.append(f"{name}^({e})")
            term = "*".join(factors)
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"FracPoly({self})"


class FracRat:
    """Formal quotient of FracPolys.

    The denominator is normalized so its lexicographically least term
    has positive coefficient and exponent (0, 0): the sign and the
    monomial move to the numerator.  The joint integer content of
    numerator and denominator (the gcd of all their coefficients
    together) is divided out, so 4x / 4(1 - uv) stores as x / (1 - uv)
    while x / 2 stays as it is.  No polynomial factor is ever cancelled
    here, and equality is by cross-multiplication; sums and products do
    collapse a denominator when the other side divides it exactly.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: FracPoly, den: FracPoly | None = None):
        if den is None:
            den = FracPoly.one()
        if not isinstance(num, FracPoly) or not isinstance(den, FracPoly):
            raise TypeError("FracRat takes FracPoly numerator and denominator")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self._num = FracPoly.zero()
            self._den = FracPoly.one()
            return
        (eu, ev), c = den.lex_min_term()
        num = num.shift(-eu, -ev)
        den = den.shift(-eu, -ev)
        if c < 0:
            num = -num
            den = -den
        content = 0
        for cc in num._t.values():
            content = gcd(content, cc)
        for cc in den._t.values():
            content = gcd(content, cc)
        if content > 1:
            num = num.try_divide(FracPoly.const(content))
            den = den.try_divide(FracPoly.const(content))
        if len(den._t) > 1:
            q = num.try_divide(den)
            if q is not None:
                num = q
                den = FracPoly.one()
        self._num = num
        self._den = den

    @property
    def num(self) -> FracPoly:
        return self._num

    @property
    def den(self) -> FracPoly:
        return self._den

    @classmethod
    def from_int(cls, c: int) -> "FracRat":
        return cls(FracPoly.const(c))

    @classmethod
    def from_fraction(cls, q: Fraction) -> "FracRat":
        return cls(FracPoly.const(q.numerator), FracPoly.const(q.denominator))

    @classmethod
    def from_poly(cls, p: FracPoly) -> "FracRat":
        return cls(p)

    @classmethod
    def zero(cls) -> "FracRat":
        return cls(FracPoly.zero())

    @classmethod
    def one(cls) -> "FracRat":
        return cls(FracPoly.one())

    @classmethod
    def monomial(cls, eu, ev, c: int = 1) -> "FracRat":
        return cls(FracPoly.monomial(eu, ev, c))

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    def _coerce(self, other):
        if isinstance(other, FracRat):
            return other
        if isinstance(other, int):
            return FracRat.from_int(other)
        if isinstance(other, Fraction):
            return FracRat.from_fraction(other)
        if isinstance(other, FracPoly):
            return FracRat(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._num * other._den == other._num * self._den

    __hash__ = None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._den == other._den:
            return FracRat(self._num + other._num, self._den)
        # When one denominator exactly divides the other, rewrite over the
        # larger one instead of cross-multiplying.  This is not a gcd: it
        # only fires on exact division, but that is the common case here
        # (denominators are powers of the same normalization factor), and
        # without it iterated sums blow up multiplicatively.
        q = other._den.try_divide(self._den)
        if q is not None:
            return FracRat(self._num * q + other._num, other._den)
        q = self._den.try_divide(other._den)
        if q is not None:
            return FracRat(self._num + other._num * q, self._den)
        return FracRat(
            self._num * other._den + other._num * self._den,
            self._den * other._den,
        )

    __radd__ = __add__

    def __neg__(self):
        return FracRat(-self._num, self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        one = FracPoly.one()
        a, b = self._num, self._den
        c, d = other._num, other._den
        # Cross-cancel exact factors before multiplying out.
        if d != one:
            q = a.try_divide(d)
            if q is not None:
                a, d = q, one
        if b != one:
            q = c.try_divide(b)
            if q is not None:
                c, b = q, one
        return FracRat(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero FracRat")
        return self * FracRat(other._den, other._num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("FracRat powers must be integers")
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return FracRat(self._den, self._num) ** (-n)
        return FracRat(self._num**n, self._den**n)

    def adams(self, n: int) -> "FracRat":
        return FracRat(self._num.adams(n), self._den.adams(n))

    def wt_realize(self) -> "WeightPoly":
        num = self._num.weight_terms()
        den = self._den.weight_terms()
        if not den:
            raise DenominatorVanishes(
                "denominator vanishes identically under u = v = s"
            )
        return WeightPoly(num, den)

    def euler_realize(self) -> int:
        val = self.wt_realize().evaluate_at_one()
        if val.denominator != 1:
            raise NonIntegerValue(f"Euler value {val} is not an integer")
        return int(val)

    def is_laurent_polynomial(self) -> tuple[bool, FracPoly | None]:
        """Decide whether this quotient is an honest Laurent polynomial.

        Divisibility is tested exactly after scaling exponents to
        integers; the quotient must land back in the integral subring
        (integer coefficients), so e.g. 2/4 reports False.  On success
        the quotient is returned.
        """
        if self.is_zero:
            return True, FracPoly.zero()
        q = self._num.try_divide(self._den)
        if q is None:
            return False, None
        return True, q

    def to_json(self) -> dict:
        return {"num": self._num.to_records(), "den": self._den.to_records()}

    @classmethod
    def from_json(cls, data) -> "FracRat":
        return cls(
            FracPoly.from_records(data["num"]),
            FracPoly.from_records(data["den"]),
        )

    def __str__(self):
        if self._den == FracPoly.one():
            return str(self._num)
        return f"({self._num}) / ({self._den})"

    def __repr__(self):
        return f"FracRat({self})"


def _bi_divide(A: dict, B: dict):
    """Exact division of bivariate integer-exponent polynomials.

    Performed as long division in Q(Y)[X]; each quotient coefficient must
    divide exactly in Q[Y] (after the separate monomial shifts, Laurent
    divisibility is equivalent to polynomial divisibility).  Returns the
    quotient as {(i, j): Fraction} or None.
    """
    def by_x(table):
        out: dict[int, uv.UPoly] = {}
        for (i, j), c in table.items():
            out.setdefault(i, {})[j] = Fraction(c)
        return out

    rem = by_x(A)
    den = by_x(B)
    dx = max(den)
    lead = den[dx]
    quot: dict[int, uv.UPoly] = {}
    while rem:
        rx = max(rem)
        if rx < dx:
            return None
        q = uv.udiv_exact(rem[rx], lead)
        if q is None:
            return None
        quot[rx - dx] = q
        for i, p in den.items():
            tgt = i + rx - dx
            cur = uv.usub(rem.get(tgt, {}), uv.umul(q, p))
            if cur:
                rem[tgt] = cur
            else:
                rem.pop(tgt, None)
    out = {}
    for i, p in quot.items():
        for j, c in p.items():
            out[(i, j)] = c
    return out


class WeightPoly:
    """Reduced fraction of integer-coefficient Laurent polynomials in s.

    Built from the u = v = s specialization.  The stored form is
    canonical: numerator and denominator share no polynomial factor, both
    have coprime integer coefficients jointly, the denominator is an
    honest polynomial in an integer power s^{1/K} with nonzero positive
    constant term, and any Laurent offset sits on the numerator.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num_terms: dict[Fraction, int], den_terms: dict[Fraction, int]):
        if not den_terms:
            raise DenominatorVanishes("zero denominator in weight fraction")
        if not num_terms:
            self._num = {}
            self._den = {Fraction(0): 1}
            return
        K = 1
        for e in list(num_terms) + list(den_terms):
            e = Fraction(e)
            K = lcm(K, e.denominator)
        nscaled = {int(Fraction(e) * K): Fraction(c) for e, c in num_terms.items()}
        dscaled = {int(Fraction(e) * K): Fraction(c) for e, c in den_terms.items()}
        nv, dv = min(nscaled), min(dscaled)
        npoly = {e - nv: c for e, c in nscaled.items()}
        dpoly = {e - dv: c for e, c in dscaled.items()}
        g = uv.ugcd(npoly, dpoly)
        if uv.udeg(g) > 0:
            npoly = uv.udiv_exact(npoly, g)
            dpoly = uv.udiv_exact(dpoly, g)
        ncont, nprim = uv.uprimitive(npoly)
        dcont, dprim = uv.uprimitive(dpoly)
        ratio = ncont / dcont
        num_int = {e: c * ratio.numerator for e, c in nprim.items()}
        den_int = {e: c * ratio.denominator for e, c in dprim.items()}
        if den_int[0] < 0:
            num_int = {e: -c for e, c in num_int.items()}
            den_int = {e: -c for e, c in den_int.items()}
        offset = Fraction(nv - dv, K)
        self._num = {Fraction(e, K) + offset: c for e, c in num_int.items()}
        self._den = {Fraction(e, K): c for e, c in den_int.items()}

    @property
    def num_terms(self) -> dict[Fraction, int]:
        return dict(self._num)

    @property
    def den_terms(self) -> dict[Fraction, int]:
        return dict(self._den)

    @property
    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return self._den == {Fraction(0): 1} and (
            not self._num or list(self._num) == [Fraction(0)]
        )

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self._num.get(Fraction(0), 0) == other
        if not isinstance(other, WeightPoly):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash(
            (frozenset(self._num.items()), frozenset(self._den.items()))
        )

    def evaluate_at_one(self) -> Fraction:
        den = sum(self._den.values())
        if den == 0:
            raise PoleAtOne("weight fraction has a pole at s = 1")
        return Fraction(sum(self._num.values()), den)

    def to_json(self) -> dict:
        return {
            "num": [
                {"e": str(e), "c": c} for e, c in sorted(self._num.items())
            ],
            "den": [
                {"e": str(e), "c": c} for e, c in sorted(self._den.items())
            ],
        }

    def __str__(self):
        def side(terms):
            if not terms:
                return "0"
            parts = []
            for e, c in sorted(terms.items()):
                if e == 0:
                    term = str(abs(c))
                else:
                    mag = "" if abs(c) == 1 else f"{abs(c)}*"
                    term = f"{mag}s^({e})" if e != 1 else f"{mag}s"
                if not parts:
                    parts.append(term if c > 0 else f"-{term}")
                else:
                    parts.append(f"+ {term}" if c > 0 else f"- {term}")
            return " ".join(parts)

        if self._den == {Fraction(0): 1}:
            return side(self._num)
        return f"({side(self._num)}) / ({side(self._den)})"

    def __repr__(self):
        return f"WeightPoly({self})"


def adams(n: int, x):
    """Exponent-scaling Adams operation; a ring homomorphism with
    adams(m, adams(n, x)) == adams(m*n, x)."""
    return x.adams(n)


def wt_realize(x) -> WeightPoly:
    return x.wt_realize()


def euler_realize(x) -> int:
    return x.euler_realize()


def is_laurent_polynomial(x) -> tuple[bool, FracPoly | None]:
    return x.is_laurent_polynomial()


def mu_poly(n: int) -> FracPoly:
    """Spectrum of the n-th roots of unity with its standard grading:
    1 + sum_{a=1}^{n-1} u^{a/n} v^{(n-a)/n}."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("mu_poly needs a positive integer")
    terms: dict[Exp, int] = {(Fraction(0), Fraction(0)): 1}
    for a in range(1, n):
        terms[(Fraction(a, n), Fraction(n - a, n))] = 1
    return FracPoly(terms)


def uv_monomial(k=1) -> FracPoly:
    """(uv)^k as a FracPoly; k may be any rational."""
    k = _exp(k)
    return FracPoly.monomial(k, k)


def lhalf_poly() -> FracPoly:
    """Spectrum of the half Tate twist: -(uv)^{1/2}."""
    return FracPoly.monomial(Fraction(1, 2), Fraction(1, 2), -1)
