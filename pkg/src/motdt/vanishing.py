"""Local motivic vanishing-cycle integrals from resolution data.

A ResolutionGraph encodes the combinatorics of an embedded resolution of
a plane-curve germ: divisors (exceptional components plus strict branches)
with their multiplicities in the pulled-back function, and one edge per
intersection point (a double edge is two points).  For a one-variable
germ t -> t^m the graph degenerates to a single point of multiplicity m.

integrate_local evaluates the Hodge realization of the (normalized,
monodromy-equivariant) vanishing-cycle class at the origin:

  dim 1:   hsp( L^{-1/2} (1 - [mu_m]) )

  dim 2:   (uv)^{-1} ( 1 - sum_E  hsp_cover_open(E)
                         - sum_P  (1 - uv) hsp([mu_{gcd}]) )

where E runs over exceptional divisors, the cover over E is the cyclic
cover of degree mult(E) branched at the intersection points with branch
indices the neighbouring multiplicities, the open part removes the fibre
over every intersection point, and P runs over intersection points with
gcd of the two multiplicities.  The formula is valid for germs with
reduced strict branches crossing the exceptional locus transversally,
which the validation enforces.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .covers import cyclic_cover, hsp_cover_open
from .errors import InvalidGraph, InvalidParams
from .spectrum import FracRat, lhalf_poly, mu_poly, uv_monomial


@dataclass(frozen=True)
class Divisor:
    id: str
    mult: int
    exceptional: bool

    def to_json(self) -> dict:
        return {"id": self.id, "mult": self.mult, "exceptional": self.exceptional}


class ResolutionGraph:
    """Dual graph of an embedded resolution, or a dimension-1 point germ."""

    __slots__ = ("dim", "point_mult", "divisors", "edges", "_by_id")

    def __init__(self, divisors=(), edges=(), *, _point_mult=None):
        if _point_mult is not None:
            if not isinstance(_point_mult, int) or _point_mult < 1:
                raise InvalidParams(f"point multiplicity must be >= 1, got {_point_mult}")
            self.dim = 1
            self.point_mult = _point_mult
            self.divisors = ()
            self.edges = ()
            self._by_id = {}
            return
        self.dim = 2
        self.point_mult = None
        self.divisors = tuple(divisors)
        by_id: dict[str, Divisor] = {}
        for d in self.divisors:
            if not isinstance(d, Divisor):
                raise InvalidGraph(f"not a Divisor: {d!r}")
            if d.id in by_id:
                raise InvalidGraph(f"duplicate divisor id {d.id!r}")
            if d.mult < 1:
                raise InvalidGraph(f"divisor {d.id!r} has multiplicity {d.mult} < 1")
            by_id[d.id] = d
        norm_edges = []
        for e in edges:
            a, b = e
            if a not in by_id or b not in by_id:
                raise InvalidGraph(f"edge ({a!r}, {b!r}) references an unknown divisor")
            if a == b:
                raise InvalidGraph(f"self-intersection edge on {a!r} is not normal crossing")
            norm_edges.append((a, b) if a <= b else (b, a))
        self.edges = tuple(norm_edges)
        self._by_id = by_id
        self._validate()

    @classmethod
    def point(cls, mult: int) -> "ResolutionGraph":
        """Dimension-1 germ t -> t^mult."""
        return cls(_point_mult=mult)

    def _validate(self):
        exceptional = [d for d in self.divisors if d.exceptional]
        if not exceptional:
            raise InvalidGraph("resolution graph needs at least one exceptional divisor")
        touched_strict = set()
        adj: dict[str, set[str]] = {d.id: set() for d in exceptional}
        for a, b in self.edges:
            da, db = self._by_id[a], self._by_id[b]
            if not da.exceptional and not db.exceptional:
                raise InvalidGraph(
                    f"strict branches {a!r} and {b!r} meet away from the exceptional locus"
                )
            if da.exceptional and db.exceptional:
                adj[a].add(b)
                adj[b].add(a)
            else:
                touched_strict.add(a if not da.exceptional else b)
        for d in self.divisors:
            if d.exceptional:
                continue
            if d.mult != 1:
                raise InvalidGraph(
                    f"strict branch {d.id!r} has multiplicity {d.mult}; only reduced branches are supported"
                )
            if d.id not in touched_strict:
                raise InvalidGraph(f"strict branch {d.id!r} meets no exceptional divisor")
        # the fibre over the origin must be connected
        seen = {exceptional[0].id}
        stack = [exceptional[0].id]
        while stack:
            for nxt in adj[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if len(seen) != len(exceptional):
            raise InvalidGraph("exceptional locus is disconnected")

    def mult_of(self, divisor_id: str) -> int:
        return self._by_id[divisor_id].mult

    def incident(self, divisor_id: str) -> list[str]:
        """Neighbouring divisor ids, one entry per intersection point."""
        out = []
        for a, b in self.edges:
            if a == divisor_id:
                out.append(b)
            elif b == divisor_id:
                out.append(a)
        return out

    def __eq__(self, other):
        if not isinstance(other, ResolutionGraph):
            return NotImplemented
        if self.dim != other.dim:
            return False
        if self.dim == 1:
            return self.point_mult == other.point_mult
        mine = {d.id: (d.mult, d.exceptional) for d in self.divisors}
        theirs = {d.id: (d.mult, d.exceptional) for d in other.divisors}
        return mine == theirs and sorted(self.edges) == sorted(other.edges)

    __hash__ = None

    def to_json(self) -> dict:
        if self.dim == 1:
            return {"dim": 1, "mult": self.point_mult}
        return {
            "dim": 2,
            "divisors": [d.to_json() for d in self.divisors],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json(cls, data) -> "ResolutionGraph":
        if data["dim"] == 1:
            return cls.point(int(data["mult"]))
        divisors = [
            Divisor(d["id"], int(d["mult"]), bool(d["exceptional"]))
            for d in data["divisors"]
        ]
        return cls(divisors, [tuple(e) for e in data["edges"]])

    def __repr__(self):
        if self.dim == 1:
            return f"ResolutionGraph.point({self.point_mult})"
        divs = ", ".join(
            f"{d.id}({d.mult})" + ("" if d.exceptional else "*") for d in self.divisors
        )
        return f"ResolutionGraph[{divs}; {len(self.edges)} points]"


def _point_value(m: int) -> FracRat:
    """hsp(L^{-1/2} (1 - [mu_m])); zero for a smooth (m = 1) germ."""
    lhalf_inv = FracRat(lhalf_poly()) ** (-1)
    return lhalf_inv * (FracRat.one() - FracRat(mu_poly(m)))


def integrate_local(graph: ResolutionGraph) -> FracRat:
    """Hodge spectrum of the local vanishing-cycle class at the origin."""
    if graph.dim == 1:
        return _point_value(graph.point_mult)
    uv = FracRat(uv_monomial())
    total = FracRat.one()
    for d in graph.divisors:
        if not d.exceptional:
            continue
        neighbours = graph.incident(d.id)
        branches = tuple(sorted(graph.mult_of(n) for n in neighbours))
        cover = cyclic_cover(d.mult, branches)
        removed = [gcd(d.mult, graph.mult_of(n)) for n in neighbours]
        total = total - hsp_cover_open(cover, removed)
    one_minus_uv = FracRat.one() - uv
    for a, b in graph.edges:
        g = gcd(graph.mult_of(a), graph.mult_of(b))
        total = total - one_minus_uv * FracRat(mu_poly(g))
    return (uv ** (-1)) * total


def thom_sebastiani_check(graph: ResolutionGraph, m1: int, m2: int):
    """Compare a plane-germ integral with the product of two point germs.

    For a join germ x^{m1} + y^{m2} the vanishing-cycle class is the
    product of the one-variable classes.  Returns (matches, product)
    where product = integrate_local(point(m1)) * integrate_local(point(m2)).
    """
    product = _point_value(m1) * _point_value(m2)
    return integrate_local(graph) == product, product
