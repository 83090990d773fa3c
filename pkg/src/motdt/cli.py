"""Command-line interface.

Every subcommand prints JSON by default (invariants and resolve also
take --format text).  Exit codes: 0 on success, 2 on invalid input with
a diagnostic on standard error, 1 on an internal engine failure such as
a cross-check mismatch.  The default truncation order is 6, overridable
through the MOTDT_ORDER_DEFAULT environment variable.
"""

from __future__ import annotations

import json
import os
import sys
from functools import wraps

import click

from .acceptance import run_all, summary_line
from .blowup import FamilyParams, build_graph
from .errors import EngineError, ValidationError
from .quiver import walls_table
from .report import compare_flops, compute_report


def _default_order() -> int:
    raw = os.environ.get("MOTDT_ORDER_DEFAULT", "6")
    try:
        return int(raw)
    except ValueError:
        raise click.UsageError(
            f"MOTDT_ORDER_DEFAULT must be an integer, got {raw!r}"
        ) from None


def _parse_b(ctx, param, value):
    if value == "inf":
        return None
    try:
        return int(value)
    except ValueError:
        raise click.BadParameter("must be an integer or 'inf'") from None


def _emit(obj):
    click.echo(json.dumps(obj, indent=2))


def _run(fn):
    @wraps(fn)
    def inner(*args, **kwargs):
        try:
            fn(*args, **kwargs)
        except ValidationError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except EngineError as exc:
            click.echo(f"internal error: {exc}", err=True)
            sys.exit(1)

    return inner


_OPT_A = click.option("--a", "a", type=int, required=True, help="first parameter, >= 1")
_OPT_B = click.option(
    "--b", "b", required=True, callback=_parse_b, help="second parameter, >= 1 or 'inf'"
)
_OPT_ORDER = click.option(
    "--order",
    type=int,
    default=_default_order,
    help="truncation order [default: 6, or MOTDT_ORDER_DEFAULT]",
)


@click.group()
def main():
    """Exact refined DT/BPS invariants of the two-parameter flop family."""


@main.command()
@_OPT_A
@_OPT_B
@_OPT_ORDER
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
@_run
def invariants(a, b, order, fmt):
    """Full invariant report for one family member."""
    rep = compute_report(FamilyParams(a, b), order=order)
    if fmt == "text":
        click.echo(rep.to_text())
    else:
        _emit(rep.to_json_dict())


@main.command()
@_OPT_A
@_OPT_B
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
@_run
def resolve(a, b, fmt):
    """Resolution graph of the family member."""
    params = FamilyParams(a, b)
    graph = build_graph(params)
    if fmt == "text":
        lines = [f"family member (a, b) = {params.label()}"]
        for d in graph.divisors:
            kind = "exceptional" if d.exceptional else "strict"
            lines.append(f"  {d.id}  mult {d.mult}  {kind}")
        lines.append("  edges: " + ", ".join(f"{x}-{y}" for x, y in graph.edges))
        click.echo("\n".join(lines))
    else:
        _emit({"a": a, "b": "inf" if b is None else b, "graph": graph.to_json()})


@main.command()
@_OPT_A
@_OPT_B
@_OPT_ORDER
@_run
def partition(a, b, order):
    """Truncated DT partition function over the stable rays."""
    rep = compute_report(FamilyParams(a, b), order=order)
    _emit(
        {
            "a": a,
            "b": "inf" if b is None else b,
            "order": rep.order,
            "v": list(rep.v),
            "rays": [r.to_json() for r in rep.rays],
            "partition": rep.partition.to_json(),
        }
    )


@main.command()
@click.option("--range", "index_range", required=True, help="wall indices LO:HI, e.g. -4:4")
@_run
def walls(index_range):
    """Tilt g-vectors and wall rays for a range of indices."""
    lo_text, sep, hi_text = index_range.partition(":")
    try:
        if not sep:
            raise ValueError
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise click.BadParameter(
            "expected LO:HI with integers", param_hint="--range"
        ) from None
    _emit(walls_table(lo, hi))


@main.command()
@_OPT_A
@click.option("--bs", required=True, help="comma-separated b values, e.g. 2,3,inf")
@_OPT_ORDER
@_run
def compare(a, bs, order):
    """Invariant-by-invariant comparison across b at fixed a."""
    members = []
    for token in bs.split(","):
        token = token.strip()
        if not token:
            continue
        if token == "inf":
            members.append(None)
        else:
            try:
                members.append(int(token))
            except ValueError:
                raise click.BadParameter(
                    f"bad b value {token!r}", param_hint="--bs"
                ) from None
    result = compare_flops(a, members, order=order)
    _emit(
        {
            "a": result["a"],
            "order": result["order"],
            "fields": result["fields"],
            "rows": result["rows"],
            "all_equal": result["all_equal"],
        }
    )


@main.command()
def selftest():
    """Run every headline check; nonzero exit on any failure."""
    results = run_all()
    for r in results:
        click.echo(r.line())
    click.echo(summary_line(results))
    if not all(r.passed for r in results):
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Serve the HTTP API offering the same operations."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
