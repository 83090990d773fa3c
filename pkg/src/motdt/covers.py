"""Cyclic covers of a rational curve branched at marked points.

A degree-m cyclic cover of P^1 branched over r points with local
multiplicities m_1, ..., m_r is determined by its connected-component
count c = gcd(m, m_1, ..., m_r), its genus, and the character
decomposition of H^1(D, O_D) under the deck action.  cyclic_cover
computes that data; hsp_cover and hsp_cover_open realize the compact
cover and the cover with marked fibers removed as equivariant Hodge
spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidParams, UnsupportedDisconnectedCover
from .spectrum import FracPoly, FracRat, mu_poly

BranchSpec = tuple[int, ...]


@dataclass(frozen=True)
class CoverData:
    """Invariants of one cyclic cover.

    m: degree of the cover; c: number of connected components;
    g: genus of each component; h01_chars: characters i (1 <= i < m)
    appearing in H^1(D, O_D), with multiplicity, sorted;
    split_over_affine: the single-branch-point case where the cover is a
    disjoint union of c = m affine lines compactified, i.e. mu_m x A^1
    away from the branch fiber.
    """

    m: int
    c: int
    g: int
    h01_chars: tuple[int, ...]
    split_over_affine: bool

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "c": self.c,
            "g": self.g,
            "chars": list(self.h01_chars),
            "split_over_affine": self.split_over_affine,
        }


def cyclic_cover(m: int, branches) -> CoverData:
    """Invariants of the degree-m cyclic cover branched with the given
    local multiplicities.

    Connected case (c = 1): the Euler characteristic is
    m(2 - r) + sum_j gcd(m, m_j), and character i of H^1(D, O_D) appears
    with multiplicity max(0, -deg L_i - 1) where
    deg L_i = -i + sum_j floor(m_j i / m); the multiplicities must sum
    to the genus.  Single branch point with m | m_1: the cover splits
    into m affine lines (c = m, g = 0).  All other disconnected
    configurations raise UnsupportedDisconnectedCover.
    """
    if not isinstance(m, int) or m < 1:
        raise InvalidParams(f"cover degree must be a positive integer, got {m}")
    branches = tuple(int(x) for x in branches)
    if any(x < 1 for x in branches):
        raise InvalidParams(f"branch multiplicities must be positive, got {branches}")
    r = len(branches)
    c = m
    for mj in branches:
        c = gcd(c, mj)
    if c == 1:
        chi = m * (2 - r) + sum(gcd(m, mj) for mj in branches)
        if chi % 2:
            raise InvalidParams(
                f"cover chi = {chi} is odd; branch data is inconsistent"
            )
        g = 1 - chi // 2
        if g < 0:
            raise InvalidParams(f"cover genus {g} is negative")
        chars: list[int] = []
        for i in range(1, m):
            deg = -i + sum((mj * i) // m for mj in branches)
            mult = max(0, -deg - 1)
            chars.extend([i] * mult)
        if len(chars) != g:
            raise InvalidParams(
                f"character multiplicities sum to {len(chars)}, genus is {g}"
            )
        return CoverData(m=m, c=1, g=g, h01_chars=tuple(chars), split_over_affine=False)
    if c == m and r == 1:
        # m | m_1: the cover restricted to P^1 minus the branch point is
        # trivial, so D is m disjoint rational curves.
        return CoverData(m=m, c=m, g=0, h01_chars=(), split_over_affine=True)
    raise UnsupportedDisconnectedCover(
        f"cover of degree {m} with branches {branches} has {c} components"
    )


def hsp_cover(d: CoverData) -> FracRat:
    """Equivariant Hodge spectrum of the compact cover.

    Connected: 1 + uv minus, for each character i in H^{0,1}, the pair
    u^{i/m} v^{1+(m-i)/m} + u^{1+(m-i)/m} v^{i/m}.  Split over affine:
    hsp(mu_c) * (1 + uv).
    """
    one_uv = FracPoly.one() + FracPoly.monomial(1, 1)
    if d.split_over_affine:
        return FracRat(mu_poly(d.c) * one_uv)
    m = d.m
    total = one_uv
    for i in d.h01_chars:
        total = total - FracPoly.monomial(Fraction(i, m), 1 + Fraction(m - i, m))
        total = total - FracPoly.monomial(1 + Fraction(m - i, m), Fraction(i, m))
    return FracRat(total)


def hsp_cover_open(d: CoverData, removed) -> FracRat:
    """Spectrum of the cover with the fibers over the listed points removed.

    Each removed point contributes one mu_g orbit, where g is the gcd of
    the cover degree with the local multiplicity at that point; the
    caller passes those gcd values directly.
    """
    out = hsp_cover(d)
    for gval in removed:
        gval = int(gval)
        if gval < 1:
            raise InvalidParams(f"removed-fiber gcd must be positive, got {gval}")
        out = out - FracRat(mu_poly(gval))
    return out
