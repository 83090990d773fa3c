"""Symbolic motive expressions and their realizations.

A MotiveExpr is a formal integer-linear/multiplicative combination of a
small set of atoms:

    1, L^{1/2}, [mu_n], [P^1], [A^n], [GL_n], [D]  (a cyclic-cover class)

with sums, products, and integer powers (negative powers only of the
invertible atoms L^{1/2} and [GL_n]).  realize_hsp sends an expression
to its equivariant Hodge spectrum via the atom table

    hsp(1) = 1                  hsp(L^{1/2}) = -(uv)^{1/2}
    hsp([A^n]) = (uv)^n         hsp([P^1]) = 1 + uv
    hsp([mu_n]) = 1 + sum_{a=1}^{n-1} u^{a/n} v^{(n-a)/n}
    hsp([GL_n]) = prod_{k=0}^{n-1} ((uv)^n - (uv)^k)

and cover classes through hsp_cover.  realize_chain pushes on through
the weight and Euler specializations with consistency checks.
"""

from __future__ import annotations

from fractions import Fraction

from .covers import CoverData, hsp_cover
from .errors import InvalidParams
from .spectrum import FracPoly, FracRat, WeightPoly, lhalf_poly, mu_poly

_INVERTIBLE_ATOMS = {"lefschetz_half", "gl"}


class MotiveExpr:
    """Expression tree for motive classes; immutable."""

    __slots__ = ("kind", "data")

    def __init__(self, kind: str, data):
        self.kind = kind
        self.data = data

    # -- constructors -------------------------------------------------

    @staticmethod
    def integer(c: int) -> "MotiveExpr":
        if not isinstance(c, int):
            raise InvalidParams(f"integer atom needs an int, got {c!r}")
        return MotiveExpr("int", c)

    @staticmethod
    def one() -> "MotiveExpr":
        return MotiveExpr.integer(1)

    @staticmethod
    def lefschetz_half() -> "MotiveExpr":
        return MotiveExpr("atom", ("lefschetz_half", None))

    @staticmethod
    def lefschetz() -> "MotiveExpr":
        return MotiveExpr.lefschetz_half() ** 2

    @staticmethod
    def mu(n: int) -> "MotiveExpr":
        if not isinstance(n, int) or n < 1:
            raise InvalidParams(f"mu atom needs a positive integer, got {n!r}")
        return MotiveExpr("atom", ("mu", n))

    @staticmethod
    def proj_line() -> "MotiveExpr":
        return MotiveExpr("atom", ("proj_line", None))

    @staticmethod
    def affine(n: int) -> "MotiveExpr":
        if not isinstance(n, int) or n < 0:
            raise InvalidParams(f"affine atom needs n >= 0, got {n!r}")
        return MotiveExpr("atom", ("affine", n))

    @staticmethod
    def gl(n: int) -> "MotiveExpr":
        if not isinstance(n, int) or n < 1:
            raise InvalidParams(f"gl atom needs a positive integer, got {n!r}")
        return MotiveExpr("atom", ("gl", n))

    @staticmethod
    def cover_class(cov: CoverData, label: str | None = None) -> "MotiveExpr":
        if not isinstance(cov, CoverData):
            raise InvalidParams("cover_class needs CoverData")
        return MotiveExpr("atom", ("cover", cov, label or f"D_{cov.m}"))

    # -- algebra ------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, MotiveExpr):
            return x
        if isinstance(x, int):
            return MotiveExpr.integer(x)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MotiveExpr("sum", (self, other))

    __radd__ = __add__

    def __neg__(self):
        return MotiveExpr("prod", (MotiveExpr.integer(-1), self))

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
        return MotiveExpr("prod", (self, other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise InvalidParams("motive powers must be integers")
        if n < 0 and not (
            self.kind == "atom" and self.data[0] in _INVERTIBLE_ATOMS
        ):
            raise InvalidParams(
                "negative powers are only defined for L^{1/2} and [GL_n]"
            )
        return MotiveExpr("pow", (self, n))

    # -- realization --------------------------------------------------

    def realize_hsp(self) -> FracRat:
        if self.kind == "int":
            return FracRat.from_int(self.data)
        if self.kind == "sum":
            a, b = self.data
            return a.realize_hsp() + b.realize_hsp()
        if self.kind == "prod":
            a, b = self.data
            return a.realize_hsp() * b.realize_hsp()
        if self.kind == "pow":
            base, n = self.data
            return base.realize_hsp() ** n
        name = self.data[0]
        if name == "lefschetz_half":
            return FracRat(lhalf_poly())
        if name == "mu":
            return FracRat(mu_poly(self.data[1]))
        if name == "proj_line":
            return FracRat(FracPoly.one() + FracPoly.monomial(1, 1))
        if name == "affine":
            return FracRat(FracPoly.monomial(self.data[1], self.data[1]))
        if name == "gl":
            n = self.data[1]
            out = FracPoly.one()
            for k in range(n):
                out = out * (
                    FracPoly.monomial(n, n) - FracPoly.monomial(k, k)
                )
            return FracRat(out)
        if name == "cover":
            return hsp_cover(self.data[1])
        raise InvalidParams(f"unknown atom {name}")

    def realize_chain(self) -> tuple[FracRat, WeightPoly, int]:
        """(hsp, wt, euler) with each stage a specialization of the last."""
        hsp = self.realize_hsp()
        wt = hsp.wt_realize()
        euler = hsp.euler_realize()
        check = wt.evaluate_at_one()
        if check.denominator != 1 or int(check) != euler:
            raise InvalidParams(
                f"realization tower inconsistent: wt(1) = {check}, euler = {euler}"
            )
        return hsp, wt, euler

    # -- display ------------------------------------------------------

    def _pretty(self, prec: int = 0) -> str:
        if self.kind == "int":
            return str(self.data)
        if self.kind == "atom":
            name = self.data[0]
            if name == "lefschetz_half":
                return "L^(1/2)"
            if name == "mu":
                return f"[mu_{self.data[1]}]"
            if name == "proj_line":
                return "[P1]"
            if name == "affine":
                return f"[A^{self.data[1]}]"
            if name == "gl":
                return f"[GL_{self.data[1]}]"
            if name == "cover":
                return f"[{self.data[2]}]"
        if self.kind == "sum":
            a, b = self.data
            s = f"{a._pretty(1)} + {b._pretty(1)}"
            return f"({s})" if prec > 1 else s
        if self.kind == "prod":
            a, b = self.data
            if a.kind == "int" and a.data == -1:
                s = f"-{b._pretty(2)}"
                return f"({s})" if prec > 1 else s
            s = f"{a._pretty(2)}*{b._pretty(2)}"
            return f"({s})" if prec > 2 else s
        if self.kind == "pow":
            base, n = self.data
            if base.kind == "atom" and base.data[0] == "lefschetz_half":
                e = Fraction(n, 2)
                return f"L^({e})"
            return f"{base._pretty(3)}^{n}" if n >= 0 else f"{base._pretty(3)}^({n})"
        raise InvalidParams(f"unknown node {self.kind}")

    def __str__(self):
        return self._pretty()

    def __repr__(self):
        return f"MotiveExpr({self})"

    def to_json(self):
        if self.kind == "int":
            return {"int": self.data}
        if self.kind == "atom":
            name = self.data[0]
            if name == "cover":
                return {"atom": name, "cover": self.data[1].to_json(), "label": self.data[2]}
            if self.data[1] is None:
                return {"atom": name}
            return {"atom": name, "n": self.data[1]}
        if self.kind in ("sum", "prod"):
            a, b = self.data
            return {self.kind: [a.to_json(), b.to_json()]}
        if self.kind == "pow":
            base, n = self.data
            return {"pow": [base.to_json(), n]}
        raise InvalidParams(f"unknown node {self.kind}")
