"""HTTP front end: the same operations as the command line, as JSON.

Domain validation failures (bad a, b, order, ranges) come back as 422
with a detail message; an internal engine failure — a cross-check that
should never break — comes back as 500.
"""

from __future__ import annotations

import os
from typing import Literal

from fastapi import FastAPI, Query
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, ConfigDict, Field

from .acceptance import run_all, summary_line
from .blowup import FamilyParams, build_graph
from .errors import EngineError, InvalidParams, ValidationError
from .quiver import walls_table
from .report import compare_flops, compute_report


class SpectrumTerm(BaseModel):
    eu: str
    ev: str
    c: int


class SpectrumJson(BaseModel):
    num: list[SpectrumTerm]
    den: list[SpectrumTerm]


class WeightTerm(BaseModel):
    e: str
    c: int


class WeightJson(BaseModel):
    num: list[WeightTerm]
    den: list[WeightTerm]


class BpsBlock(BaseModel):
    hsp: SpectrumJson
    motive: str
    wt: WeightJson
    euler: int


class BpsSet(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    c: BpsBlock = Field(alias="C")
    two_c: BpsBlock = Field(alias="2C")
    pt: BpsBlock


class GvBlock(BaseModel):
    gv1: int
    gv2: int


class DimsBlock(BaseModel):
    contraction: int
    abelianised: int


class StabilityBlock(BaseModel):
    v: list[int]
    order: int


class RayJson(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    d0: int
    d1: int
    ray_class: str = Field(alias="class")


class DivisorJson(BaseModel):
    id: str
    mult: int
    exceptional: bool


class GraphJson(BaseModel):
    dim: int
    divisors: list[DivisorJson]
    edges: list[list[str]]


class PartitionEntry(BaseModel):
    d0: int
    d1: int
    coeff: SpectrumJson


class PartitionJson(BaseModel):
    order: int
    entries: list[PartitionEntry]


class ReportResponse(BaseModel):
    a: int
    b: int | Literal["inf"]
    regime: str
    graph: GraphJson
    bps: BpsSet
    gv: GvBlock
    dims: DimsBlock
    stability: StabilityBlock
    rays: list[RayJson]
    partition: PartitionJson


class ResolveResponse(BaseModel):
    a: int
    b: int | Literal["inf"]
    graph: GraphJson


class PartitionResponse(BaseModel):
    a: int
    b: int | Literal["inf"]
    order: int
    v: list[int]
    rays: list[RayJson]
    partition: PartitionJson


class WallRow(BaseModel):
    i: int
    tilt: list[int]
    cotilt: list[int]
    ray: list[int]


class CompareRow(BaseModel):
    b: int | Literal["inf"]
    equal_to_first: bool
    differing_fields: list[str]


class CompareResponse(BaseModel):
    a: int
    order: int
    fields: list[str]
    rows: list[CompareRow]
    all_equal: bool


class CheckResultJson(BaseModel):
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


class SelftestResponse(BaseModel):
    results: list[CheckResultJson]
    summary: str
    all_passed: bool


app = FastAPI(
    title="motdt",
    description="Exact refined DT/BPS invariants of the two-parameter flop family.",
)


@app.exception_handler(ValidationError)
async def _validation_error(request, exc):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(EngineError)
async def _engine_error(request, exc):
    return JSONResponse(status_code=500, content={"detail": str(exc)})


def _parse_b(b: str | None) -> int | None:
    if b is None or b == "inf":
        return None
    try:
        return int(b)
    except ValueError:
        raise InvalidParams(f"b must be an integer or 'inf', got {b!r}") from None


def _order_or_default(order: int | None) -> int:
    if order is not None:
        return order
    raw = os.environ.get("MOTDT_ORDER_DEFAULT", "6")
    try:
        return int(raw)
    except ValueError:
        raise InvalidParams(
            f"MOTDT_ORDER_DEFAULT must be an integer, got {raw!r}"
        ) from None


def _b_json(b: int | None) -> int | Literal["inf"]:
    return "inf" if b is None else b


@app.get("/invariants", response_model=ReportResponse)
def invariants(
    a: int,
    b: str | None = None,
    order: int | None = None,
    format: Literal["json", "text"] = "json",
):
    """Full invariant report for one family member."""
    rep = compute_report(FamilyParams(a, _parse_b(b)), order=_order_or_default(order))
    if format == "text":
        return PlainTextResponse(rep.to_text())
    return rep.to_json_dict()


@app.get("/resolve", response_model=ResolveResponse)
def resolve(a: int, b: str | None = None):
    """Resolution graph of the family member."""
    params = FamilyParams(a, _parse_b(b))
    graph = build_graph(params)
    return {"a": a, "b": _b_json(params.b), "graph": graph.to_json()}


@app.get("/partition", response_model=PartitionResponse)
def partition(a: int, b: str | None = None, order: int | None = None):
    """Truncated DT partition function over the stable rays."""
    rep = compute_report(FamilyParams(a, _parse_b(b)), order=_order_or_default(order))
    return {
        "a": a,
        "b": _b_json(rep.b),
        "order": rep.order,
        "v": list(rep.v),
        "rays": [r.to_json() for r in rep.rays],
        "partition": rep.partition.to_json(),
    }


@app.get("/walls", response_model=list[WallRow])
def walls(range: str = Query(..., description="wall indices LO:HI, e.g. -4:4")):
    """Tilt g-vectors and wall rays for a range of indices."""
    lo_text, sep, hi_text = range.partition(":")
    try:
        if not sep:
            raise ValueError
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise InvalidParams(
            f"range must be LO:HI with integers, got {range!r}"
        ) from None
    return walls_table(lo, hi)


@app.get("/compare", response_model=CompareResponse)
def compare(a: int, bs: str, order: int | None = None):
    """Invariant-by-invariant comparison across b at fixed a."""
    members: list[int | None] = []
    for token in bs.split(","):
        token = token.strip()
        if not token:
            continue
        members.append(None if token == "inf" else _parse_b(token))
    result = compare_flops(a, members, order=_order_or_default(order))
    return {
        "a": result["a"],
        "order": result["order"],
        "fields": result["fields"],
        "rows": result["rows"],
        "all_equal": result["all_equal"],
    }


@app.get("/selftest", response_model=SelftestResponse)
def selftest(checks: str | None = None):
    """Run the headline checks (all, or a comma list of numbers)."""
    if checks is None:
        results = run_all()
    else:
        from .acceptance import run_one

        try:
            numbers = [int(tok) for tok in checks.split(",") if tok.strip()]
        except ValueError:
            raise InvalidParams(f"checks must be a comma list of integers, got {checks!r}") from None
        if not numbers:
            raise InvalidParams("checks must name at least one check")
        try:
            results = [run_one(n) for n in numbers]
        except KeyError as exc:
            raise InvalidParams(str(exc)) from None
    return {
        "results": [
            {
                "number": r.number,
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
                "seconds": r.seconds,
            }
            for r in results
        ],
        "summary": summary_line(results),
        "all_passed": all(r.passed for r in results),
    }
