"""Embedded resolution of the family curves by iterated point blowups.

The curve of the (a, b) family member is W = x^2 y - f(y) with
f(y) = y^{k+1} u(y), split as W = y * R for the residual
R = x^2 - y^k u(y):

    a <= b (b = None means the second parameter is infinite):
        k = 2a - 1,   u = 1                     (b infinite)
                      u = 1 + y^{2(b-a)+1}      (b finite)
    a > b:
        k = 2b,       u = y^{2(a-b)-1} + 1

Each chart carries a word in the two blowup substitutions

    pi_x : (x, y) -> (x y, y)        (keeps the {x = 0} divisor)
    pi_y : (x, y) -> (x, x y)        (keeps the {y = 0} divisor)

composed outermost-first (the first letter is the first blowup), and a
total transform x^p y^q R(x, y) with R coprime to both axes.  The
origin is blown up while the total divisor fails to cross normally
there; the finished atlas is then checked axis by axis and assembled
into the dual ResolutionGraph, with every intersection point counted in
exactly one chart.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ._univar import udistinct_roots, uis_squarefree, unorm
from .errors import (
    EngineError,
    GraphMismatch,
    InvalidParams,
    NormalCrossingFailure,
)
from .vanishing import Divisor, ResolutionGraph


class BiPoly:
    """Integer-coefficient polynomial in x, y with nonnegative exponents."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise InvalidParams(f"negative exponent in BiPoly term x^{i} y^{j}")
                if not isinstance(c, int):
                    raise InvalidParams(f"BiPoly coefficient {c!r} is not an int")
                if c:
                    clean[(i, j)] = clean.get((i, j), 0) + c
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def xvar(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def yvar(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BiPoly":
        return cls({(i, j): c})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidParams("BiPoly power must be nonnegative")
        res = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                res = res * base
            base = base * base
            n >>= 1
        return res

    def subst(self, px: "BiPoly", py: "BiPoly") -> "BiPoly":
        """General substitution x -> px, y -> py."""
        pow_x: dict[int, BiPoly] = {0: BiPoly.const(1)}
        pow_y: dict[int, BiPoly] = {0: BiPoly.const(1)}

        def power(cache, base, n):
            if n not in cache:
                cache[n] = power(cache, base, n - 1) * base
            return cache[n]

        out = BiPoly.zero()
        for (i, j), c in self._terms.items():
            out = out + power(pow_x, px, i) * power(pow_y, py, j) * c
        return out

    def shift_x_to_xy(self) -> "BiPoly":
        """R(x y, y): exponent remap (i, j) -> (i, i + j)."""
        return BiPoly({(i, i + j): c for (i, j), c in self._terms.items()})

    def shift_y_to_xy(self) -> "BiPoly":
        """R(x, x y): exponent remap (i, j) -> (i + j, j)."""
        return BiPoly({(i + j, j): c for (i, j), c in self._terms.items()})

    def divide_monomial(self, i: int, j: int) -> "BiPoly":
        out = {}
        for (a, b), c in self._terms.items():
            if a < i or b < j:
                raise InvalidParams(f"x^{i} y^{j} does not divide this polynomial")
            out[(a - i, b - j)] = c
        return BiPoly(out)

    @property
    def x_valuation(self) -> int:
        return min(i for i, _ in self._terms) if self._terms else 0

    @property
    def y_valuation(self) -> int:
        return min(j for _, j in self._terms) if self._terms else 0

    @property
    def order_at_origin(self) -> int:
        """Smallest total degree of a term."""
        if not self._terms:
            raise InvalidParams("the zero polynomial has no order")
        return min(i + j for i, j in self._terms)

    def restrict_y0(self) -> dict[int, Fraction]:
        """R(x, 0) as a univariate polynomial in x."""
        return unorm({i: Fraction(c) for (i, j), c in self._terms.items() if j == 0})

    def restrict_x0(self) -> dict[int, Fraction]:
        """R(0, y) as a univariate polynomial in y."""
        return unorm({j: Fraction(c) for (i, j), c in self._terms.items() if i == 0})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j) in sorted(self._terms, key=lambda e: (-e[0], e[1])):
            c = self._terms[(i, j)]
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            body = "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    __repr__ = __str__


_TERM_PIECE = re.compile(r"^(\d+|x(\^\d+)?|y(\^\d+)?)$")


def parse_bipoly(text: str) -> BiPoly:
    """Parse the `c*x^i*y^j +/- ...` format emitted by str(BiPoly)."""
    s = text.replace(" ", "")
    if not s:
        raise InvalidParams("empty polynomial string")
    chunks = [t for t in re.split(r"(?=[+-])", s) if t]
    terms: dict[tuple[int, int], int] = {}
    for chunk in chunks:
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        if not chunk:
            raise InvalidParams(f"dangling sign in polynomial {text!r}")
        coeff, i, j = 1, 0, 0
        seen = set()
        for piece in chunk.split("*"):
            if not _TERM_PIECE.match(piece):
                raise InvalidParams(f"bad term piece {piece!r} in polynomial {text!r}")
            if piece.isdigit():
                key = "c"
                val = int(piece)
            else:
                key = piece[0]
                val = int(piece[2:]) if "^" in piece else 1
            if key in seen:
                raise InvalidParams(f"repeated {key!r} factor in term {chunk!r}")
            seen.add(key)
            if key == "c":
                coeff = val
            elif key == "x":
                i = val
            else:
                j = val
        terms[(i, j)] = terms.get((i, j), 0) + sign * coeff
    return BiPoly(terms)


@dataclass(frozen=True)
class FamilyParams:
    """The two integer parameters; b = None encodes the infinite member."""

    a: int
    b: int | None

    def __post_init__(self):
        if not isinstance(self.a, int) or self.a < 1:
            raise InvalidParams(f"a must be an integer >= 1, got {self.a!r}")
        if self.b is not None and (not isinstance(self.b, int) or self.b < 1):
            raise InvalidParams(f"b must be an integer >= 1 or None, got {self.b!r}")

    @property
    def a_le_b(self) -> bool:
        return self.b is None or self.a <= self.b

    @property
    def k(self) -> int:
        return 2 * self.a - 1 if self.a_le_b else 2 * self.b

    def u_series(self) -> BiPoly:
        y = BiPoly.yvar()
        if self.a_le_b:
            if self.b is None:
                return BiPoly.const(1)
            return BiPoly.const(1) + y ** (2 * (self.b - self.a) + 1)
        return y ** (2 * (self.a - self.b) - 1) + BiPoly.const(1)

    def residual(self) -> BiPoly:
        """R with curve W = y * R;  R = x^2 - y^k u(y)."""
        x, y = BiPoly.xvar(), BiPoly.yvar()
        return x * x - (y ** self.k) * self.u_series()

    def label(self) -> str:
        return f"({self.a}, {'inf' if self.b is None else self.b})"


class _Track:
    """A divisor followed through the chart recursion."""

    __slots__ = ("mult", "exceptional", "name")

    def __init__(self, mult: int, exceptional: bool, name: str | None = None):
        self.mult = mult
        self.exceptional = exceptional
        self.name = name


@dataclass
class Chart:
    """One chart of the atlas: total transform is x^p y^q * residual."""

    word: tuple[str, ...]
    p: int
    q: int
    residual: BiPoly
    x_div: _Track | None
    y_div: _Track | None

    def total_pullback(self) -> BiPoly:
        return BiPoly.monomial(self.p, self.q) * self.residual

    def to_json(self) -> dict:
        return {
            "word": "".join(self.word),
            "p": self.p,
            "q": self.q,
            "residual": str(self.residual),
        }


def _needs_blowup(c: Chart) -> bool:
    R = c.residual
    if R.coeff(0, 0) != 0:
        return False
    if c.p > 0 and c.q > 0:
        return True
    if R.coeff(1, 0) == 0 and R.coeff(0, 1) == 0:
        return True
    if c.q > 0 and R.coeff(1, 0) == 0:
        # residual tangent to the {y = 0} divisor at the origin
        return True
    if c.p > 0 and R.coeff(0, 1) == 0:
        return True
    return False


def _blow_up(c: Chart) -> tuple[Chart, Chart]:
    R = c.residual
    m = R.order_at_origin
    new_mult = c.p + c.q + m
    E = _Track(new_mult, True)
    rx = R.shift_x_to_xy().divide_monomial(0, m)
    ry = R.shift_y_to_xy().divide_monomial(m, 0)
    child_x = Chart(c.word + ("x",), c.p, new_mult, rx, c.x_div, E)
    child_y = Chart(c.word + ("y",), new_mult, c.q, ry, E, c.y_div)
    for child in (child_x, child_y):
        if child.residual.x_valuation or child.residual.y_valuation:
            raise EngineError(
                f"residual in chart {child.word} kept an axis factor"
            )
    return child_x, child_y


def resolve_charts(
    residual: BiPoly, include_line: bool = False, max_charts: int = 20000
) -> list[Chart]:
    """Blow up the origin until every chart is finished; sorted by word."""
    if residual.is_zero:
        raise InvalidParams("residual curve is the zero polynomial")
    if residual.x_valuation or residual.y_valuation:
        raise InvalidParams("residual must not contain an axis component")
    line = _Track(1, False, "L1") if include_line else None
    base = Chart((), 0, 1 if include_line else 0, residual, None, line)
    finished: list[Chart] = []
    stack = [base]
    steps = 0
    while stack:
        steps += 1
        if steps > max_charts:
            raise EngineError("blowup recursion did not terminate")
        c = stack.pop()
        if _needs_blowup(c):
            stack.extend(_blow_up(c))
        else:
            finished.append(c)
    finished.sort(key=lambda c: c.word)
    return finished


def chart_equations(params: FamilyParams) -> list[Chart]:
    """Finished atlas for the family member, line component included."""
    return resolve_charts(params.residual(), include_line=True)


def verify_normal_crossing(chart: Chart) -> bool:
    """Check the chart data along its divisor axes.

    The total divisor is normally crossing there iff the residual keeps
    no axis factor, the origin carries at most two branches, and the
    residual meets each axis that is part of the divisor transversally
    in distinct points (squarefree axis restriction).  Behaviour of the
    residual away from the axes is not examined.
    """
    R = chart.residual
    if R.is_zero or R.x_valuation or R.y_valuation:
        return False  # residual vanished or contains an axis
    if chart.p > 0 and chart.q > 0 and R.coeff(0, 0) == 0:
        return False
    if chart.q > 0 and not uis_squarefree(R.restrict_y0()):
        return False
    if chart.p > 0 and not uis_squarefree(R.restrict_x0()):
        return False
    return True


def _assemble_graph(charts: list[Chart], strict_label: str) -> ResolutionGraph:
    for c in charts:
        if not verify_normal_crossing(c):
            raise NormalCrossingFailure(
                f"chart {''.join(c.word) or '()'} is not normally crossing"
            )
    tracks: list[_Track] = []
    for c in charts:
        for t in (c.x_div, c.y_div):
            if t is not None and t not in tracks:
                tracks.append(t)
    y_role: dict[int, Chart] = {}
    x_role: dict[int, Chart] = {}
    for c in charts:
        if c.y_div is not None:
            if id(c.y_div) in y_role:
                raise GraphMismatch(
                    f"divisor of multiplicity {c.y_div.mult} has two y-side charts"
                )
            y_role[id(c.y_div)] = c
        if c.x_div is not None:
            if id(c.x_div) in x_role:
                raise GraphMismatch(
                    f"divisor of multiplicity {c.x_div.mult} has two x-side charts"
                )
            x_role[id(c.x_div)] = c
    # count residual intersections on each divisor, from its y-side
    # chart, and cross-check against the x-side chart of the same divisor
    residual_counts: dict[int, int] = {}
    for t in tracks:
        yc = y_role.get(id(t))
        if yc is None:
            raise GraphMismatch(
                f"divisor of multiplicity {t.mult} has no y-side chart"
            )
        count = udistinct_roots(yc.residual.restrict_y0())
        xc = x_role.get(id(t))
        if xc is not None:
            other = udistinct_roots(xc.residual.restrict_x0())
            if other != count:
                raise GraphMismatch(
                    f"divisor of multiplicity {t.mult} sees {count} residual "
                    f"points on the y side but {other} on the x side"
                )
        elif t.exceptional:
            raise GraphMismatch(
                f"exceptional divisor of multiplicity {t.mult} has no x-side chart"
            )
        if not t.exceptional and count:
            raise NormalCrossingFailure(
                "residual curve meets a strict line component"
            )
        residual_counts[id(t)] = count
    # naming: exceptional divisors by multiplicity
    exceptional = [t for t in tracks if t.exceptional]
    mults = [t.mult for t in exceptional]
    if len(set(mults)) != len(mults):
        raise GraphMismatch(
            f"multiplicity collision among exceptional divisors: {sorted(mults)}"
        )
    for t in exceptional:
        t.name = f"E{t.mult}"
    divisors = [Divisor(t.name, t.mult, t.exceptional) for t in tracks]
    edges = []
    for c in charts:
        if c.p > 0 and c.q > 0:
            edges.append((c.x_div.name, c.y_div.name))
    total_residual_points = sum(residual_counts.values())
    if total_residual_points:
        divisors.append(Divisor(strict_label, 1, False))
        for t in tracks:
            edges.extend([(t.name, strict_label)] * residual_counts[id(t)])
    return ResolutionGraph(divisors, edges)


def resolve_curve(
    residual: BiPoly, include_line: bool = False, strict_label: str | None = None
) -> ResolutionGraph:
    """Resolve an arbitrary residual curve (times the line if asked)."""
    if strict_label is None:
        strict_label = "L2" if include_line else "strict"
    charts = resolve_charts(residual, include_line=include_line)
    return _assemble_graph(charts, strict_label)


def family_graph_closed_form(params: FamilyParams) -> ResolutionGraph:
    """The resolution graph of the family member, written down directly.

    a <= b:  chain L1 - E3 - E5 - ... - E_{2a-1} - E_{4a}, with E_{2a}
             and L2 each meeting E_{4a} once.
    a > b:   chain L1 - E3 - ... - E_{2b+1}, with L2 meeting E_{2b+1}
             at two points.
    """
    a, b = params.a, params.b
    divisors = [Divisor("L1", 1, False), Divisor("L2", 1, False)]
    edges = []
    if params.a_le_b:
        chain = [2 * k + 1 for k in range(1, a)]  # E3 ... E_{2a-1}
        for m in chain:
            divisors.append(Divisor(f"E{m}", m, True))
        divisors.append(Divisor(f"E{2 * a}", 2 * a, True))
        divisors.append(Divisor(f"E{4 * a}", 4 * a, True))
        path = ["L1"] + [f"E{m}" for m in chain] + [f"E{4 * a}"]
        edges.extend(zip(path, path[1:]))
        edges.append((f"E{4 * a}", f"E{2 * a}"))
        edges.append((f"E{4 * a}", "L2"))
    else:
        chain = [2 * k + 1 for k in range(1, b + 1)]  # E3 ... E_{2b+1}
        for m in chain:
            divisors.append(Divisor(f"E{m}", m, True))
        path = ["L1"] + [f"E{m}" for m in chain]
        edges.extend(zip(path, path[1:]))
        edges.append((f"E{2 * b + 1}", "L2"))
        edges.append((f"E{2 * b + 1}", "L2"))
    return ResolutionGraph(divisors, edges)


def family_atlas_closed_form(params: FamilyParams) -> dict[tuple[str, ...], BiPoly]:
    """Total transforms of every finished chart, written down directly.

    With N = k // 2 and u the unit series of the member:

      side charts, j = 0 .. N-1, word (x,)*j + (y,):
          x^{2j+3} y^{2j+1} (1 - x^{k-2-2j} y^{k-2j} u(x y))
      k even, word (x,)*N:
          y^{2N+1} (x^2 - u(y))
      k odd, words (x,)*(N+1), (x,)*N + (y, y), (x,)*N + (y, x):
          y^{2N+2} (x^2 y - u(y))
          x^{4N+4} y^{2N+1} (1 - y u(x^2 y))
          x^{2N+2} y^{4N+4} (x - u(x y^2))
    """
    k = params.k
    n = k // 2
    u = params.u_series()
    x, y = BiPoly.xvar(), BiPoly.yvar()
    one = BiPoly.const(1)
    atlas: dict[tuple[str, ...], BiPoly] = {}
    for j in range(n):
        word = ("x",) * j + ("y",)
        atlas[word] = BiPoly.monomial(2 * j + 3, 2 * j + 1) * (
            one - BiPoly.monomial(k - 2 - 2 * j, k - 2 * j) * u.subst(x, x * y)
        )
    if k % 2 == 0:
        atlas[("x",) * n] = BiPoly.monomial(0, 2 * n + 1) * (x * x - u)
    else:
        atlas[("x",) * (n + 1)] = BiPoly.monomial(0, 2 * n + 2) * (x * x * y - u)
        atlas[("x",) * n + ("y", "y")] = BiPoly.monomial(4 * n + 4, 2 * n + 1) * (
            one - y * u.subst(x, x * x * y)
        )
        atlas[("x",) * n + ("y", "x")] = BiPoly.monomial(2 * n + 2, 4 * n + 4) * (
            x - u.subst(x, x * y * y)
        )
    return atlas


def build_graph(params: FamilyParams) -> ResolutionGraph:
    """Resolve the family curve and cross-check against the closed form."""
    graph = resolve_curve(params.residual(), include_line=True, strict_label="L2")
    expected = family_graph_closed_form(params)
    if not graph == expected:
        raise GraphMismatch(
            f"resolved graph for {params.label()} disagrees with the closed form:\n"
            f"  resolved: {graph!r}\n  expected: {expected!r}"
        )
    return graph
