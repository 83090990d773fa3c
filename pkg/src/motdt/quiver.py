"""Lattice data of the contraction algebra's two-vertex quiver.

Dimension vectors live in Z^2 over the simples (S0, S1); the curve-count
realization sends a dimension vector d to

    rank d = -2 d0 + d1,        deg d = 3 d0 - d1.

Tilting is governed by the matrix K with K^n = [[1-2n, -4n], [n, 1+2n]];
the g-vectors of the tilts are the rows of (K^{-n})^T:

    [T_{2n}]   = (1+2n, -n),       annihilating the ray (n, 1+2n)
    [T_{2n-1}] = (4n, 1-2n),       annihilating the ray (2n-1, 4n)

with [E_i] = -[T_i].  A stability parameter v = (v0, v1) in Z^2 gives
the central charge Z_v(d) = -<v, d> + i (d0 + d1); v is generic when
v0 != v1, and the chamber with phase(S0) > phase(S1) is v0 > v1.  The
default parameter is (2, -1).

The rigid rays up to a given order come in three classes, labelled by
|rank|: "pt" (rank 0), "C" (rank +-1), "2C" (rank +-2):

    pt:  (1, 2)
    C:   (n, 2n+1) for n >= 0  and  (m, 2m-1) for m >= 1
    2C:  (2t+1, 4t+4) for t >= 0  and  (2s-1, 4s-4) for s >= 1
"""

from __future__ import annotations

from functools import cmp_to_key
from math import gcd
from typing import NamedTuple

from .errors import EngineError, InvalidParams, NonGenericParameter, WrongSimpleOrdering
from .series import DimVector, _as_dim

KMATRIX = ((-1, -4), (1, 3))

DEFAULT_V = (2, -1)


def kpower(n: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """K^n in closed form, any integer n."""
    return ((1 - 2 * n, -4 * n), (n, 1 + 2 * n))


class GVector(NamedTuple):
    c0: int
    c1: int

    def __neg__(self):
        return GVector(-self.c0, -self.c1)


def pairing(g: GVector, d) -> int:
    d = _as_dim(d)
    return g.c0 * d.d0 + g.c1 * d.d1


def tilt_gvector(i: int) -> GVector:
    """[T_i]: (1+2n, -n) at i = 2n, (4n, 1-2n) at i = 2n-1."""
    if i % 2 == 0:
        n = i // 2
        return GVector(1 + 2 * n, -n)
    n = (i + 1) // 2
    return GVector(4 * n, 1 - 2 * n)


def cotilt_gvector(i: int) -> GVector:
    return -tilt_gvector(i)


def wall_ray(i: int) -> tuple[int, int]:
    """The lattice ray annihilated by [T_i], oriented to d0 + d1 > 0."""
    if i % 2 == 0:
        n = i // 2
        ray = (n, 1 + 2 * n)
    else:
        n = (i + 1) // 2
        ray = (2 * n - 1, 4 * n)
    if sum(ray) < 0:
        ray = (-ray[0], -ray[1])
    if pairing(tilt_gvector(i), ray) != 0:
        raise EngineError(f"wall ray for tilt {i} is not annihilated")
    return ray


def rank(d) -> int:
    d = _as_dim(d)
    return -2 * d.d0 + d.d1


def deg(d) -> int:
    d = _as_dim(d)
    return 3 * d.d0 - d.d1


def check_stability_param(v) -> tuple[int, int]:
    v0, v1 = v
    if not isinstance(v0, int) or not isinstance(v1, int):
        raise InvalidParams(f"stability parameter must be a pair of ints, got {v!r}")
    if v0 == v1:
        raise NonGenericParameter(
            f"v = {v!r} is on the wall v0 = v1; all central charges align"
        )
    if v0 < v1:
        raise WrongSimpleOrdering(
            f"v = {v!r} puts phase(S0) below phase(S1); need v0 > v1"
        )
    return (v0, v1)


def central_charge(v, d) -> tuple[int, int]:
    """Z_v(d) as (re, im) = (-<v, d>, d0 + d1)."""
    d = _as_dim(d)
    v0, v1 = v
    return (-(v0 * d.d0 + v1 * d.d1), d.d0 + d.d1)


def ray_classes(order: int) -> dict[DimVector, str]:
    """All rigid rays of total degree <= order, labelled pt / C / 2C."""
    if order < 1:
        raise InvalidParams("order must be >= 1")
    out: dict[DimVector, str] = {}

    def put(d0, d1, label):
        d = DimVector(d0, d1)
        if d.total > order or d.total == 0:
            return
        if d in out:
            raise EngineError(f"ray {tuple(d)} produced twice")
        if gcd(d.d0, d.d1) != 1:
            raise EngineError(f"ray {tuple(d)} is not primitive")
        out[d] = label

    put(1, 2, "pt")
    n = 0
    while 3 * n + 1 <= order:
        put(n, 2 * n + 1, "C")
        n += 1
    m = 1
    while 3 * m - 1 <= order:
        put(m, 2 * m - 1, "C")
        m += 1
    t = 0
    while 6 * t + 5 <= order:
        put(2 * t + 1, 4 * t + 4, "2C")
        t += 1
    s = 1
    while 6 * s - 5 <= order:
        put(2 * s - 1, 4 * s - 4, "2C")
        s += 1
    return out


def stable_rays(order: int, v=DEFAULT_V) -> list[DimVector]:
    """Rigid rays sorted by strictly descending phase of Z_v."""
    v = check_stability_param(v)
    rays = list(ray_classes(order))

    def cmp(d1, d2):
        x1, y1 = central_charge(v, d1)
        x2, y2 = central_charge(v, d2)
        cross = x2 * y1 - x1 * y2
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        raise NonGenericParameter(
            f"v = {v!r} aligns the central charges of {tuple(d1)} and {tuple(d2)}"
        )

    return sorted(rays, key=cmp_to_key(cmp))


def walls_table(i_min: int, i_max: int) -> list[dict]:
    """Tilt data for i in [i_min, i_max]: g-vectors and wall rays."""
    if i_min > i_max:
        raise InvalidParams(f"empty wall range [{i_min}, {i_max}]")
    out = []
    for i in range(i_min, i_max + 1):
        t = tilt_gvector(i)
        out.append(
            {
                "i": i,
                "tilt": (t.c0, t.c1),
                "cotilt": (-t.c0, -t.c1),
                "ray": wall_ray(i),
            }
        )
    return out
