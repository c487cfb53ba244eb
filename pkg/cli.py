"""
Command-line interface for StarBessel.

Usage:
    python cli.py eval --fn besselj --nu 0 --z 0
    python cli.py radius --family f --a 1 --nu 0.7 --beta 0.5
    python cli.py threshold --family g --a 3 --beta 0.5
    python cli.py --format csv table --id 2 --output table2.csv
    python cli.py verify --family f --a 1 --nu 0.7 --beta 0 --radius 1.43
"""

from __future__ import annotations

import functools
import json
import logging
import sys
from typing import Any, Callable, Dict, Optional

import click
import pandas as pd

import config
from bessel_core import series_diagnostics
from disk_verify import verify_starlike_on_disk
from exceptions import GBesselError, InvalidParameterError
from models import Family, FunctionalRoute, GBesselParams, RadiusQuery, SeriesConfig
from starlike_solvers import nu_tilde, solve_radius, solve_threshold
from tables import FORMATS, TABLES, TableBuilder

logger = logging.getLogger(__name__)


class ComplexParamType(click.ParamType):
    """Accepts Python complex literals such as 0.5, -1.2 or 0.3+0.4j."""

    name = "complex"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> complex:
        if isinstance(value, complex):
            return value
        try:
            return complex(str(value).replace(" ", ""))
        except ValueError:
            self.fail(f"{value!r} is not a complex number", param, ctx)


COMPLEX = ComplexParamType()


def _format_number(value: Any, digits: int) -> Any:
    if isinstance(value, bool) or not isinstance(value, (int, float, complex)):
        return value
    if isinstance(value, complex):
        if value.imag == 0.0:
            return f"{value.real:.{digits}g}"
        return f"{value.real:.{digits}g}{value.imag:+.{digits}g}j"
    return f"{value:.{digits}g}"


def _emit(ctx: click.Context, record: Dict[str, Any]) -> None:
    """Write one result record in the selected output format."""
    fmt, digits = ctx.obj["format"], ctx.obj["digits"]
    if fmt == "json":
        click.echo(json.dumps(record, indent=2, sort_keys=True))
        return
    formatted = {key: _format_number(value, digits) for key, value in record.items()}
    if fmt == "csv":
        click.echo(pd.DataFrame([formatted]).to_csv(index=False, lineterminator="\n"), nl=False)
        return
    for key, value in formatted.items():
        click.echo(f"{key}: {value}")


def _reports_errors(command: Callable[..., None]) -> Callable[..., None]:
    """Numeric and configuration failures go to stderr with exit status 1."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            command(*args, **kwargs)
        except (GBesselError, config.ConfigurationError) as exc:
            logger.debug("command failed", exc_info=True)
            click.echo(f"Error: {exc}", err=True)
            sys.exit(1)

    return wrapper


def _cfg(ctx: click.Context) -> SeriesConfig:
    return ctx.obj["cfg"]


@click.group()
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", help="Output format")
@click.option(
    "--digits",
    type=click.IntRange(1, config.MAX_OUTPUT_DIGITS),
    default=config.OUTPUT_DIGITS,
    help="Significant figures in text and CSV output",
)
@click.option("--tol", type=float, default=None, help="Relative series tolerance (overrides GBESSEL_TOL)")
@click.option("--max-terms", type=int, default=None, help="Series term cap (overrides GBESSEL_MAX_TERMS)")
@click.pass_context
def cli(ctx: click.Context, fmt: str, digits: int, tol: Optional[float], max_terms: Optional[int]) -> None:
    """
    Generalized Bessel functions, their zeros and starlikeness radii.

    Examples:

        python cli.py radius --family g --a 3 --nu 0.7 --beta 0.95

        python cli.py --format json table --id 4
    """
    logging.basicConfig(level=config.LOG_LEVEL, format=config.LOG_FORMAT)
    try:
        cfg = config.series_config(tol=tol, max_terms=max_terms)
    except InvalidParameterError as exc:
        raise click.UsageError(str(exc), ctx) from exc
    except config.ConfigurationError as exc:
        click.echo(f"Error: {exc}", err=True)
        sys.exit(1)
    ctx.obj = {"format": fmt, "digits": digits, "cfg": cfg}


@cli.command("eval")
@click.option("--fn", "function", type=click.Choice(["gbessel", "besselj", "besseli"]), required=True)
@click.option("--a", type=int, default=1, show_default=True)
@click.option("--b", type=float, default=1.0, show_default=True)
@click.option("--p", type=float, default=0.0, show_default=True)
@click.option("--c", type=float, default=1.0, show_default=True)
@click.option("--nu", type=float, default=None, help="Order for besselj and besseli")
@click.option("--z", type=COMPLEX, required=True)
@click.pass_context
@_reports_errors
def eval_command(
    ctx: click.Context, function: str, a: int, b: float, p: float, c: float, nu: Optional[float], z: complex
) -> None:
    """Evaluate ₐB_{b,p,c}, J_ν or I_ν at a point with truncation diagnostics."""
    if function == "gbessel":
        params = GBesselParams(a=a, b=b, p=p, c=c)
    else:
        if nu is None:
            raise click.UsageError(f"--nu is required for {function}", ctx)
        if function == "besselj":
            params = GBesselParams.bessel_j(nu)
        else:
            if z.imag != 0.0 or z.real < 0.0:
                raise InvalidParameterError(f"I_ν is evaluated for real x ≥ 0 only, got {z}")
            if not nu > -1.0:
                raise InvalidParameterError(f"I_ν needs ν > −1, got {nu!r}")
            params = GBesselParams.bessel_i(nu)

    evaluation = series_diagnostics(params, z, _cfg(ctx))
    _emit(
        ctx,
        {
            "function": function,
            "value": evaluation.value.real,
            "value_im": evaluation.value.imag,
            "terms": evaluation.terms,
            "last_term": evaluation.last_term,
        },
    )


@cli.command()
@click.option("--family", type=click.Choice([f.value for f in Family]), required=True)
@click.option("--a", type=int, required=True)
@click.option("--nu", type=float, required=True)
@click.option("--beta", type=float, default=0.0, show_default=True)
@click.pass_context
@_reports_errors
def radius(ctx: click.Context, family: str, a: int, nu: float, beta: float) -> None:
    """Radius of starlikeness of order β for f, g or h."""
    root = solve_radius(RadiusQuery(a=a, nu=nu, beta=beta, family=family), _cfg(ctx))
    _emit(ctx, {"family": family, "a": a, "nu": nu, "beta": beta, **root.to_dict()})


@cli.command()
@click.option("--family", type=click.Choice([Family.F.value, Family.G.value]), required=True)
@click.option("--a", type=int, required=True)
@click.option("--beta", type=float, default=0.0, show_default=True)
@click.pass_context
@_reports_errors
def threshold(ctx: click.Context, family: str, a: int, beta: float) -> None:
    """Smallest order ν for which f or g is starlike of order β on the unit disk."""
    root = solve_threshold(family, a, beta, _cfg(ctx))
    record: Dict[str, Any] = {"family": family, "a": a, "beta": beta, **root.to_dict()}
    if Family.parse(family) is Family.G:
        record["nu_tilde"] = nu_tilde().value
    _emit(ctx, record)


@cli.command()
@click.option("--id", "table_id", type=click.Choice([str(key) for key in TABLES]), required=True)
@click.option("--output", "-o", type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_context
@_reports_errors
def table(ctx: click.Context, table_id: str, output: Optional[str]) -> None:
    """Regenerate one published table; exit status 1 if any cell deviates."""
    builder = TableBuilder(cfg=_cfg(ctx))
    result = builder.build(int(table_id))
    rendered = builder.render(result, ctx.obj["format"], ctx.obj["digits"])
    if output:
        try:
            with open(output, "w", encoding="utf-8", newline="") as handle:
                handle.write(rendered)
        except OSError as exc:
            click.echo(f"Error: cannot write {output}: {exc}", err=True)
            sys.exit(1)
        click.echo(f"Table {table_id} written to {output}", err=True)
    else:
        click.echo(rendered, nl=False)
    if not result.passed:
        for cell in result.failures:
            click.echo(
                f"cell a={cell.a} beta={cell.beta:g}: {cell.value:.10g} vs {cell.reference}",
                err=True,
            )
        sys.exit(1)


@cli.command()
@click.option("--family", type=click.Choice([f.value for f in Family]), required=True)
@click.option("--a", type=int, required=True)
@click.option("--nu", type=float, required=True)
@click.option("--beta", type=float, default=0.0, show_default=True)
@click.option("--radius", "disk_radius", type=float, required=True)
@click.option("--circles", type=click.IntRange(min=1), default=config.DISK_CIRCLES, show_default=True)
@click.option("--angles", type=click.IntRange(min=1), default=config.DISK_ANGLES, show_default=True)
@click.option("--route", type=click.Choice([r.value for r in FunctionalRoute]), default=FunctionalRoute.CLOSED.value)
@click.pass_context
@_reports_errors
def verify(
    ctx: click.Context,
    family: str,
    a: int,
    nu: float,
    beta: float,
    disk_radius: float,
    circles: int,
    angles: int,
    route: str,
) -> None:
    """Sample Re(zF'/F) − β on a polar grid; exit status 1 unless the minimum is positive."""
    report = verify_starlike_on_disk(
        a, nu, beta, disk_radius, n_circles=circles, n_angles=angles, family=family, cfg=_cfg(ctx), route=route
    )
    _emit(ctx, report.to_dict())
    if not report.passed:
        sys.exit(1)


def main() -> None:
    """CLI entry point."""
    cli(obj={})


if __name__ == "__main__":
    main()
