"""Exact-arithmetic engine for refined DT/BPS invariants of length-2 flops."""

from .errors import (
    ConstantTermNotOne,
    DenominatorVanishes,
    EngineError,
    GraphMismatch,
    InvalidGraph,
    InvalidParams,
    MismatchWithEngine,
    NonGenericParameter,
    NonIntegerValue,
    NonzeroConstantTerm,
    NormalCrossingFailure,
    OrderMismatch,
    PoleAtOne,
    SupportViolation,
    UnsupportedDisconnectedCover,
    ValidationError,
    WrongSimpleOrdering,
)
from .spectrum import (
    FracPoly,
    FracRat,
    WeightPoly,
    adams,
    euler_realize,
    is_laurent_polynomial,
    wt_realize,
)
from .motive import MotiveExpr
from .covers import BranchSpec, CoverData, cyclic_cover, hsp_cover, hsp_cover_open
from .series import (
    BpsEntry,
    DimVector,
    MotSeries,
    bps_normalizer,
    extract_bps,
    plog,
    sym,
)
from .vanishing import Divisor, ResolutionGraph, integrate_local, thom_sebastiani_check
from .blowup import (
    BiPoly,
    Chart,
    FamilyParams,
    build_graph,
    chart_equations,
    family_atlas_closed_form,
    family_graph_closed_form,
    parse_bipoly,
    resolve_charts,
    resolve_curve,
    verify_normal_crossing,
)
from .quiver import (
    DEFAULT_V,
    KMATRIX,
    GVector,
    central_charge,
    cotilt_gvector,
    deg,
    kpower,
    pairing,
    rank,
    ray_classes,
    stable_rays,
    tilt_gvector,
    wall_ray,
    walls_table,
)
from .report import (
    InvariantsReport,
    RaySummary,
    closed_form_cover,
    compare_flops,
    compute_partition,
    compute_report,
    hsp_formulas,
    partition_round_trip,
    strong_rationality_check,
)
from .acceptance import CheckResult, run_all, run_one

__version__ = "0.1.0"
