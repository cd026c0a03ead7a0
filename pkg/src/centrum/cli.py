"""Centrum CLI: build rings, check properties, run the theorem suite, search.

Exit codes: 0 = favorable, 1 = a definite fails / VIOLATION, 2 = usage or resource error.
"""

from __future__ import annotations

import logging
import sys
from collections.abc import Callable
from pathlib import Path

import orjson
import typer
from rich.console import Console

from centrum import __version__
from centrum.constructions import RingBuilder, parse, render, write_table
from centrum.core.config import Settings
from centrum.core.errors import CentrumError
from centrum.core.models import PolyPropertyId, PropertyId, SuiteReport, Verdict
from centrum.harness import TheoremSuite
from centrum.polys import check_poly_property
from centrum.properties import check_property
from centrum.radicals import radical_report
from centrum.reporting import format_info, format_report, format_verdict
from centrum.ring import FiniteRing, Subset
from centrum.search import CounterexampleSearch, SearchHit, resolve_property

console = Console(stderr=True)
logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

app = typer.Typer(
    name="centrum",
    help=(
        "Finite-ring laboratory for central reduced rings.\n\n"
        "Exit codes: 0=favorable, 1=fails or VIOLATION, 2=usage or resource error."
    ),
    add_completion=False,
    no_args_is_help=True,
)


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f"centrum {__version__}")
        raise typer.Exit()


def _settings(ctx: typer.Context) -> Settings:
    return ctx.obj if isinstance(ctx.obj, Settings) else Settings()


def _run_safe(fn: Callable[[], int]) -> None:
    try:
        code = fn()
    except (CentrumError, OSError) as exc:
        console.print(f"[red]error:[/red] {exc}", markup=True, highlight=False)
        raise typer.Exit(2) from None
    raise typer.Exit(code)


def _dump(payload: object) -> None:
    typer.echo(orjson.dumps(payload, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode())


def _verdict_json(ring: str, v: Verdict) -> dict[str, object]:
    return {"ring": ring, "result": v.result_label, **v.model_dump(mode="json")}


def _names(R: FiniteRing, subset: Subset) -> str:
    return " ".join(R.name(i) for i in subset.indices())


@app.callback()
def main_callback(
    ctx: typer.Context,
    order_cap: int | None = typer.Option(None, "--order-cap", help="Largest ring order built."),
    ideal_cap: int | None = typer.Option(
        None, "--ideal-cap", help="Largest order for full ideal enumeration."
    ),
    budget: int | None = typer.Option(None, "--budget", help="Polynomial search step budget."),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr."),
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True, help="Show version and exit."
    ),
) -> None:
    """Finite-ring laboratory for central reduced rings."""
    overrides = {
        "max_order": order_cap,
        "ideal_enumeration_cap": ideal_cap,
        "search_budget": budget,
    }
    ctx.obj = Settings(**{k: v for k, v in overrides.items() if v is not None})
    if verbose:
        logging.getLogger("centrum").setLevel(logging.INFO)


# ── report ───────────────────────────────────────────────────────

@app.command()
def report(
    ctx: typer.Context,
    expr: str = typer.Argument(..., help='Ring expression, e.g. "PolyNil(Z 2, 2)".'),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON instead of lines."),
) -> None:
    """Order, center, radicals and every element-level property of one ring.

    Example:
      centrum report "PolyNil(Z 2, 2)"
    """
    _run_safe(lambda: _report_impl(_settings(ctx), expr, as_json))


def _report_impl(settings: Settings, expr: str, as_json: bool) -> int:
    tree = parse(expr)
    ring_text = render(tree)
    R = RingBuilder(settings).build(tree)
    rep = radical_report(R)
    verdicts = [check_property(R, p) for p in PropertyId]
    if as_json:
        _dump({
            "ring": ring_text,
            "order": R.order,
            "center": int(R.center_mask.sum()),
            "radicals": rep.summary(R),
            "verdicts": [_verdict_json(ring_text, v) for v in verdicts],
        })
        return 0
    typer.echo(format_info(
        ring=ring_text,
        order=R.order,
        center=int(R.center_mask.sum()),
        nilpotents=_names(R, rep.nilpotents),
        prime_radical=_names(R, rep.prime_radical),
    ))
    for v in verdicts:
        typer.echo(format_verdict(ring_text, v))
    return 0


# ── check ────────────────────────────────────────────────────────

@app.command()
def check(
    ctx: typer.Context,
    expr: str = typer.Argument(..., help="Ring expression."),
    prop: str = typer.Argument(..., metavar="PROPERTY", help="Property name, e.g. prime."),
    degree: int | None = typer.Option(
        None, "--degree", "-d", help="Degree bound for polynomial properties."
    ),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON instead of a line."),
) -> None:
    """Check one property; exit 1 when it fails.

    Example:
      centrum check "Z 6" prime
      centrum check "PolyNil(Z 4, 2)" armendariz --degree 2
    """
    try:
        p = resolve_property(prop)
    except ValueError as exc:
        raise typer.BadParameter(str(exc), param_hint="PROPERTY") from None
    if degree is not None and not isinstance(p, PolyPropertyId):
        raise typer.BadParameter(f"{p.value} takes no degree", param_hint="--degree")
    _run_safe(lambda: _check_impl(_settings(ctx), expr, p, degree, as_json))


def _check_impl(
    settings: Settings, expr: str, p: PropertyId | PolyPropertyId, degree: int | None,
    as_json: bool,
) -> int:
    tree = parse(expr)
    ring_text = render(tree)
    R = RingBuilder(settings).build(tree)
    if isinstance(p, PolyPropertyId):
        verdict = check_poly_property(R, p, degree, settings)
    else:
        verdict = check_property(R, p)
    if as_json:
        _dump(_verdict_json(ring_text, verdict))
    else:
        typer.echo(format_verdict(ring_text, verdict))
    return 0 if verdict.favorable else 1


# ── radicals ─────────────────────────────────────────────────────

@app.command()
def radicals(
    ctx: typer.Context,
    expr: str = typer.Argument(..., help="Ring expression."),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON instead of lines."),
) -> None:
    """Nilpotent set, prime radical, 2-primal flag and singular ideals.

    Example:
      centrum radicals "Z 8"
    """
    _run_safe(lambda: _radicals_impl(_settings(ctx), expr, as_json))


def _radicals_impl(settings: Settings, expr: str, as_json: bool) -> int:
    tree = parse(expr)
    R = RingBuilder(settings).build(tree)
    rep = radical_report(R)
    if as_json:
        _dump({"ring": render(tree), **rep.summary(R)})
        return 0
    typer.echo(format_info(
        ring=render(tree),
        nilpotents=_names(R, rep.nilpotents),
        prime_radical=_names(R, rep.prime_radical),
        two_primal=str(rep.two_primal).lower(),
        singular_right=_names(R, rep.singular_right),
        singular_left=_names(R, rep.singular_left),
    ))
    return 0


# ── theorems ─────────────────────────────────────────────────────

@app.command()
def theorems(
    ctx: typer.Context,
    tier: str = typer.Option("standard", "--tier", help="standard, slow or all."),
    only: list[str] | None = typer.Option(None, "--only", help="Theorem id; repeatable."),
    workers: int | None = typer.Option(None, "--workers", help="Worker processes."),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON instead of lines."),
) -> None:
    """Run the theorem suite over the corpus; exit 1 on any VIOLATION.

    Example:
      centrum theorems --tier standard
      centrum theorems --only T18 --only T19
    """
    if tier not in ("standard", "slow", "all"):
        raise typer.BadParameter(f"unknown tier {tier!r}; use standard, slow or all",
                                 param_hint="--tier")
    _run_safe(lambda: _theorems_impl(_settings(ctx), tier, only or [], workers, as_json))


def _theorems_impl(
    settings: Settings, tier: str, only: list[str], workers: int | None, as_json: bool
) -> int:
    if workers is not None:
        settings = settings.model_copy(update={"workers": workers})
    result: SuiteReport = TheoremSuite(settings).run_all(tier, only)
    logger.info(
        "Suite: %d passed, %d vacuous, %d violations",
        result.passed, result.vacuous, result.violations,
    )
    if as_json:
        _dump(result.model_dump(mode="json"))
    else:
        typer.echo(format_report(result), nl=False)
    return 0 if result.ok else 1


# ── search ───────────────────────────────────────────────────────

@app.command()
def search(
    ctx: typer.Context,
    max_order: int = typer.Option(16, "--max-order", help="Largest candidate order."),
    satisfy: list[str] | None = typer.Option(None, "--satisfy", help="Property to hold."),
    violate: list[str] | None = typer.Option(None, "--violate", help="Property to fail."),
    generators: list[str] | None = typer.Option(
        None, "--generators", help="Atom expression; repeatable. Default: Z n and friends."
    ),
    depth: int | None = typer.Option(None, "--depth", help="Combinator nesting depth."),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON instead of lines."),
) -> None:
    """Find rings that satisfy and violate the given properties, smallest first.

    Example:
      centrum search --max-order 16 --satisfy central_reduced --violate reduced
    """
    try:
        sat = [resolve_property(p) for p in satisfy or []]
        vio = [resolve_property(p) for p in violate or []]
    except ValueError as exc:
        raise typer.BadParameter(str(exc)) from None
    if not sat and not vio:
        raise typer.BadParameter("give at least one --satisfy or --violate property")
    _run_safe(lambda: _search_impl(
        _settings(ctx), max_order, sat, vio, generators or None, depth, as_json
    ))


def _search_impl(
    settings: Settings,
    max_order: int,
    sat: list,
    vio: list,
    generators: list[str] | None,
    depth: int | None,
    as_json: bool,
) -> int:
    hits: list[SearchHit] = CounterexampleSearch(settings).run(
        sat, vio, max_order, generators, depth
    )
    if as_json:
        _dump([h.model_dump() for h in hits])
        return 0
    for h in hits:
        typer.echo(format_info(ring=h.expr, order=h.order))
    typer.echo(format_info(results=len(hits)))
    return 0


# ── export ───────────────────────────────────────────────────────

@app.command()
def export(
    ctx: typer.Context,
    expr: str = typer.Argument(..., help="Ring expression."),
    path: Path = typer.Argument(..., help="Destination table file."),
) -> None:
    """Write a ring's tables to a file that Table(path) loads back.

    Example:
      centrum export "Triv(Z 2)" triv.ring
    """
    _run_safe(lambda: _export_impl(_settings(ctx), expr, path))


def _export_impl(settings: Settings, expr: str, path: Path) -> int:
    R = RingBuilder(settings).build(parse(expr))
    written = write_table(R, path)
    typer.echo(format_info(path=str(written), order=R.order))
    return 0


def main() -> None:
    settings = Settings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.WARNING),
        format=LOG_FORMAT,
        stream=sys.stderr,
    )
    app()


if __name__ == "__main__":
    main()
