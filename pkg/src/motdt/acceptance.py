"""Self-check registry: the engine's headline identities, end to end.

Each check is independent and recomputes what it needs; a check returns
a one-line detail string on success and raises CheckFailure (or any
engine error) on failure.  run_all gives one PASS/FAIL line per check —
the same list backs the test suite and the command-line selftest.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Callable

from .blowup import (
    BiPoly,
    FamilyParams,
    build_graph,
    chart_equations,
    family_atlas_closed_form,
    family_graph_closed_form,
    resolve_curve,
    verify_normal_crossing,
)
from .covers import cyclic_cover
from .motive import MotiveExpr
from .quiver import (
    DEFAULT_V,
    KMATRIX,
    central_charge,
    deg,
    kpower,
    pairing,
    rank,
    stable_rays,
    tilt_gvector,
    cotilt_gvector,
    wall_ray,
)
from .report import (
    closed_form_cover,
    compare_flops,
    compute_report,
    hsp_formulas,
    partition_round_trip,
    ray_bps_inputs,
    reports_agree,
    strong_rationality_check,
)
from .series import plethystic_law_cases
from .spectrum import euler_realize, wt_realize
from .vanishing import ResolutionGraph, integrate_local, thom_sebastiani_check


class CheckFailure(AssertionError):
    pass


def _ensure(cond, msg: str):
    if not cond:
        raise CheckFailure(msg)


# The members every headline identity is verified on.
HEADLINE_MEMBERS = ((2, None), (2, 2), (2, 3), (3, None), (3, 3), (3, 4), (4, None))


def _cover_motive(params: FamilyParams) -> MotiveExpr:
    """L^{-1}(1 - [D]) + 2 (deep side) or + 3 (shallow side)."""
    cover = closed_form_cover(params)
    const = 2 if params.a_le_b else 3
    return (MotiveExpr.lefschetz_half() ** -2) * (
        MotiveExpr.one() - MotiveExpr.cover_class(cover, label=f"D_{cover.m}")
    ) + MotiveExpr.integer(const)


def _germ_motive(m: int) -> MotiveExpr:
    return (MotiveExpr.lefschetz_half() ** -1) * (
        MotiveExpr.one() - MotiveExpr.mu(m)
    )


def check_resolution_integral() -> str:
    """C spectrum: resolution integral = closed-form cover motive, < 1s each."""
    slowest = 0.0
    for a, b in HEADLINE_MEMBERS:
        params = FamilyParams(a, b)
        t0 = perf_counter()
        lhs = integrate_local(build_graph(params))
        rhs = _cover_motive(params).realize_hsp()
        dt = perf_counter() - t0
        _ensure(lhs == rhs, f"{params.label()}: integral != cover motive")
        _ensure(dt < 1.0, f"{params.label()}: took {dt:.2f}s, budget is 1s")
        slowest = max(slowest, dt)
    return f"{len(HEADLINE_MEMBERS)} members equal; slowest case {slowest:.2f}s"


def check_displayed_spectra() -> str:
    """hsp1 matches its displayed sum exactly; hsp2 via the corrected identity."""
    for a, b in HEADLINE_MEMBERS:
        # hsp_formulas asserts both displayed identities and raises
        # MismatchWithEngine on any disagreement.
        hsp_formulas(FamilyParams(a, b))
    return (
        f"{len(HEADLINE_MEMBERS)} members: hsp1 exact; "
        "display2 = (uv)^(1/2) hsp2 + (u - 1), the documented correction"
    )


def check_weights_and_dimensions() -> str:
    """Constant weights, Euler numbers, and contraction-algebra dimensions."""
    for a, b in HEADLINE_MEMBERS:
        params = FamilyParams(a, b)
        hsp1, hsp2 = hsp_formulas(params)
        gv1 = min(2 * a + 1, 2 * b + 2) if b is not None else 2 * a + 1
        _ensure(
            wt_realize(hsp1) == gv1,
            f"{params.label()}: wt(hsp1) is not the constant {gv1}",
        )
        _ensure(
            euler_realize(hsp1) == gv1,
            f"{params.label()}: euler(hsp1) != {gv1}",
        )
        _ensure(
            wt_realize(hsp2) == a - 1,
            f"{params.label()}: wt(hsp2) is not the constant {a - 1}",
        )
        _ensure(
            euler_realize(hsp2) == a - 1,
            f"{params.label()}: euler(hsp2) != {a - 1}",
        )
        dim_con = gv1 + 4 * (a - 1)
        want_dim = 6 * a - 3 if params.a_le_b else 4 * a + 2 * b - 2
        _ensure(dim_con == want_dim, f"{params.label()}: dim {dim_con} != {want_dim}")
        want_ab = (min(2 * a, 2 * b + 1) if b is not None else 2 * a) + 1
        _ensure(gv1 == want_ab, f"{params.label()}: abelianised dim {gv1} != {want_ab}")
    return f"{len(HEADLINE_MEMBERS)} members: weights constant, dims match closed forms"


def check_one_variable_germs() -> str:
    """d = 1 germ integral = hsp(L^{-1/2}(1 - [mu_m])) for m <= 12."""
    for m in range(1, 13):
        direct = integrate_local(ResolutionGraph.point(m))
        _ensure(
            direct == _germ_motive(m).realize_hsp(),
            f"m = {m}: germ integral != L^(-1/2)(1 - [mu_{m}])",
        )
    return "germ integral matches the monomial motive for m = 1..12"


def check_chart_atlas() -> str:
    """Blowup atlas = closed forms; normal crossings; graphs as stated."""
    members = 0
    charts_seen = 0
    for a in range(2, 7):
        for b in (*range(1, 7), None):
            params = FamilyParams(a, b)
            charts = chart_equations(params)
            computed = {c.word: c.total_pullback() for c in charts}
            _ensure(
                computed == family_atlas_closed_form(params),
                f"{params.label()}: chart equations differ from the closed forms",
            )
            for c in charts:
                _ensure(
                    verify_normal_crossing(c),
                    f"{params.label()}: chart {''.join(c.word)} is not normal crossing",
                )
            _ensure(
                build_graph(params) == family_graph_closed_form(params),
                f"{params.label()}: resolved graph differs from the stated one",
            )
            members += 1
            charts_seen += len(charts)
    return f"{members} members, {charts_seen} charts: equations, crossings, graphs all match"


def check_join_multiplicativity() -> str:
    """Cusp x^2 - y^3: integral = product of the one-variable germ integrals."""
    cusp = BiPoly.monomial(2, 0) - BiPoly.monomial(0, 3)
    graph = resolve_curve(cusp)
    matches, product = thom_sebastiani_check(graph, 2, 3)
    _ensure(matches, "cusp integral != germ(2) * germ(3)")
    _ensure(
        product == _germ_motive(3).realize_hsp(),
        "product != 1 * hsp(L^(-1/2)(1 - [mu_3]))",
    )
    return "cusp resolves to E2-E3-E6 and the join identity holds"


def check_cover_characters() -> str:
    """Cyclic covers: Euler numbers and exact character multisets, a, b <= 8."""
    for a in range(1, 9):
        cov = cyclic_cover(4 * a, (2 * a - 1, 2 * a, 1))
        _ensure(cov.c == 1, f"D_{4 * a} is not connected")
        _ensure(2 - 2 * cov.g == 2 - 2 * a, f"chi(D_{4 * a}) = {2 - 2 * cov.g}")
        want = tuple(2 * a + 2 * j - 1 for j in range(1, a + 1))
        _ensure(
            tuple(sorted(cov.h01_chars)) == want,
            f"D_{4 * a} characters {cov.h01_chars} != {want}",
        )
    for b in range(1, 9):
        cov = cyclic_cover(2 * b + 1, (2 * b - 1, 1, 1))
        _ensure(cov.c == 1, f"D_{2 * b + 1} is not connected")
        _ensure(2 - 2 * cov.g == 2 - 2 * b, f"chi(D_{2 * b + 1}) = {2 - 2 * cov.g}")
        want = tuple(range(b + 1, 2 * b + 1))
        _ensure(
            tuple(sorted(cov.h01_chars)) == want,
            f"D_{2 * b + 1} characters {cov.h01_chars} != {want}",
        )
    return "chi and characters match for D_4a and D_2b+1, a, b <= 8"


def check_plethystic_laws() -> str:
    """Randomized sym/plog laws plus BPS integrality on the closed-form values."""
    failures = plethystic_law_cases(seed=20260821, cases=200, max_order=8)
    _ensure(not failures, "; ".join(failures[:3]))
    checked = 0
    pt = (MotiveExpr.lefschetz_half() ** -3) * MotiveExpr.proj_line()
    values = [pt.realize_hsp()]
    for a, b in HEADLINE_MEMBERS:
        params = FamilyParams(a, b)
        values.append(integrate_local(build_graph(params)))
        values.append(integrate_local(ResolutionGraph.point(a)))
    for val in values:
        ok, _ = val.is_laurent_polynomial()
        _ensure(ok, f"BPS value {val} is not integral")
        checked += 1
    return f"200 randomized law cases clean; {checked} BPS values integral"


def _mat_mul(p, q):
    return (
        (
            p[0][0] * q[0][0] + p[0][1] * q[1][0],
            p[0][0] * q[0][1] + p[0][1] * q[1][1],
        ),
        (
            p[1][0] * q[0][0] + p[1][1] * q[1][0],
            p[1][0] * q[0][1] + p[1][1] * q[1][1],
        ),
    )


def check_lattice_and_walls() -> str:
    """Matrix powers, g-vector orthogonality, ray table, strict phase order."""
    ident = ((1, 0), (0, 1))
    # det K = 1, so the inverse is integral.
    kinv = ((KMATRIX[1][1], -KMATRIX[0][1]), (-KMATRIX[1][0], KMATRIX[0][0]))
    fwd, bwd = ident, ident
    for n in range(0, 51):
        _ensure(kpower(n) == fwd, f"kpower({n}) != K^{n}")
        _ensure(kpower(-n) == bwd, f"kpower({-n}) != K^{-n}")
        fwd = _mat_mul(fwd, KMATRIX)
        bwd = _mat_mul(bwd, kinv)
    for i in range(-50, 51):
        w = wall_ray(i)
        _ensure(
            pairing(tilt_gvector(i), w) == 0,
            f"tilt g-vector {i} is not orthogonal to its wall ray",
        )
        _ensure(
            pairing(cotilt_gvector(i), w) == 0,
            f"cotilt g-vector {i} is not orthogonal to its wall ray",
        )
    table = {
        (1, 0): (-2, 3),
        (1, 1): (-1, 2),
        (2, 3): (-1, 3),
        (1, 2): (0, 1),
        (1, 3): (1, 0),
        (1, 4): (2, -1),
        (0, 1): (1, -1),
    }
    rays6 = stable_rays(6, DEFAULT_V)
    _ensure(set(map(tuple, rays6)) == set(table), "order-6 stable rays changed")
    for d in rays6:
        _ensure(
            (rank(d), deg(d)) == table[tuple(d)],
            f"(rank, deg) of {tuple(d)} != {table[tuple(d)]}",
        )
    rays = stable_rays(50, DEFAULT_V)
    for d, e in zip(rays, rays[1:]):
        xd, yd = central_charge(DEFAULT_V, d)
        xe, ye = central_charge(DEFAULT_V, e)
        _ensure(
            xe * yd - xd * ye > 0,
            f"phases of {tuple(d)} and {tuple(e)} are not strictly ordered",
        )
    return f"K powers |n| <= 50, walls |i| <= 50, {len(rays)} rays strictly ordered"


def check_flop_indistinguishability() -> str:
    """Whole b-families agree at fixed a; different a are told apart."""
    cf2 = compare_flops(2, [2, 3, None], order=6)
    _ensure(cf2["all_equal"], f"a = 2 family split: {cf2['rows']}")
    cf3 = compare_flops(3, [3, 4, 5, None], order=6)
    _ensure(cf3["all_equal"], f"a = 3 family split: {cf3['rows']}")
    equal, diffs = reports_agree(cf2["reports"][0], cf3["reports"][0])
    _ensure(not equal, "a = 2 and a = 3 reports are unexpectedly equal")
    return (
        "b-families at a = 2 and a = 3 indistinguishable at order 6; "
        "a = 2 vs 3 differ in " + ", ".join(diffs)
    )


def check_partition_round_trip() -> str:
    """plog of the assembled partition returns every per-ray BPS input."""
    rep = compute_report(FamilyParams(2, None), order=6)
    recovered = partition_round_trip(rep)
    pt_rays = 0
    for rs in rep.rays:
        want = ray_bps_inputs(
            rs.label, rs.dim, rep.order, rep.bps_c, rep.bps_2c, rep.bps_pt
        )
        got = {e.k: e.value for e in recovered[rs.dim] if not e.value.is_zero}
        _ensure(got == want, f"ray {tuple(rs.dim)}: recovered BPS input differs")
        for e in recovered[rs.dim]:
            _ensure(e.is_laurent, f"ray {tuple(rs.dim)}, k = {e.k}: not integral")
        if rs.label == "pt":
            pt_rays += 1
            ks = sorted(e.k for e in recovered[rs.dim])
            _ensure(ks == [1, 2], f"point ray multiples {ks} != [1, 2] at order 6")
            _ensure(
                all(e.value == rep.bps_pt for e in recovered[rs.dim]),
                "point ray does not carry L^(-3/2)[P^1] at every multiple",
            )
    _ensure(pt_rays == 1, "expected exactly one point ray")
    _ensure(strong_rationality_check(rep), "ray inputs break the |rank| rule")
    return "(2, inf) at order 6: all ray inputs recovered, point ray included"


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.number:2d}  {self.name}: {self.detail}  [{self.seconds:.2f}s]"


CHECKS: tuple[tuple[int, str, Callable[[], str]], ...] = (
    (1, "resolution-integral", check_resolution_integral),
    (2, "displayed-spectra", check_displayed_spectra),
    (3, "weights-and-dimensions", check_weights_and_dimensions),
    (4, "one-variable-germs", check_one_variable_germs),
    (5, "chart-atlas", check_chart_atlas),
    (6, "join-multiplicativity", check_join_multiplicativity),
    (7, "cover-characters", check_cover_characters),
    (8, "plethystic-laws", check_plethystic_laws),
    (9, "lattice-and-walls", check_lattice_and_walls),
    (10, "flop-indistinguishability", check_flop_indistinguishability),
    (11, "partition-round-trip", check_partition_round_trip),
)


def run_one(number: int) -> CheckResult:
    for num, name, fn in CHECKS:
        if num == number:
            break
    else:
        raise KeyError(f"no check numbered {number}")
    t0 = perf_counter()
    try:
        detail = fn()
        passed = True
    except Exception as exc:
        detail = f"{type(exc).__name__}: {exc}"
        passed = False
    return CheckResult(num, name, passed, detail, perf_counter() - t0)


def run_all() -> list[CheckResult]:
    return [run_one(num) for num, _, _ in CHECKS]


def summary_line(results) -> str:
    failed = [r for r in results if not r.passed]
    if failed:
        return f"{len(failed)} of {len(results)} checks FAILED"
    return f"all {len(results)} checks passed"
