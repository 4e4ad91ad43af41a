import functools
import logging
from pathlib import Path
from typing import Iterator, Optional, Tuple

import click

from .config import OUTPUT_FORMATS, PRECISION_ENV_VAR, RunConfig, SvgOptions, configure_logging
from .core.carpet import CarpetSpec, profile
from .errors import BudgetExceeded, CarpetError, GridViolation, MalformedCarpet
from .geometry.boxcount import box_count_bounds
from .geometry.components import PieceKind, component_stats, components, projection_dichotomy
from .geometry.render import render_spectrum_svg, render_svg
from .geometry.squares import BasicRectangle
from .geometry.words import SymbolWord
from .measure.padic import gamma_table, obstruction_primes
from .pipeline import InvariantPipeline
from .spectrum.beta import spectrum_curve
from .tools.io_tools import dump_json, io_fs, read_carpet, to_jsonable

logger = logging.getLogger(__name__)


def _report_error(error: CarpetError):
    click.echo(dump_json({"error": error.kind, "message": str(error)}), err=True, nl=False)


def handle_errors(command):
    """Turn domain errors into a JSON message on stderr and an exit code"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except BudgetExceeded as e:
            logger.error(f"Budget exceeded: {str(e)}")
            _report_error(e)
            ctx.exit(2)
        except CarpetError as e:
            logger.error(f"{e.kind}: {str(e)}")
            _report_error(e)
            ctx.exit(1)
    return wrapper


def _flatten(data, prefix: str = "") -> Iterator[Tuple[str, object]]:
    if isinstance(data, dict):
        for key in sorted(data):
            yield from _flatten(data[key], f"{prefix}{key}.")
    elif isinstance(data, list) and any(isinstance(item, (dict, list)) for item in data):
        for index, item in enumerate(data):
            yield from _flatten(item, f"{prefix}{index}.")
    else:
        yield prefix.rstrip("."), data


def _emit(config: RunConfig, payload):
    data = to_jsonable(payload, config.precision_bits)
    if config.output_format == "text":
        for key, value in _flatten(data):
            click.echo(f"{key}: {value}")
    else:
        click.echo(dump_json(data), nl=False)


def parse_rect(spec: CarpetSpec, word: str) -> BasicRectangle:
    """Parse a digit word 'i:j,i:j,...' into a basic rectangle of the carpet"""
    digits = []
    for token in word.split(","):
        try:
            i, j = (int(part) for part in token.split(":"))
        except ValueError:
            raise MalformedCarpet(f"Bad digit {token!r}; expected column:row")
        if (i, j) not in spec.digit_set:
            raise GridViolation(f"Digit ({i}, {j}) is not in the digit set")
        digits.append((i, j))
    return BasicRectangle(
        rank=len(digits),
        x_word=SymbolWord(spec.n, tuple(i for i, _ in digits)),
        y_word=SymbolWord(spec.m, tuple(j for _, j in digits)),
    )


@click.group()
@click.option('--precision', type=int, envvar=PRECISION_ENV_VAR, default=None,
              help='Precision in bits for transcendental evaluation')
@click.option('--max-rank', type=int, default=None, help='Largest rank reported by analyze')
@click.option('--budget', type=int, default=None, help='Enumeration budget in pieces')
@click.option('--format', 'output_format', type=click.Choice(OUTPUT_FORMATS), default='json',
              help='Output format')
@click.option('--verbose', '-v', is_flag=True, help='Log progress to stderr')
@click.option('--log-file', type=click.Path(dir_okay=False), default=None, help='Also log to this file; relative names go under the logs directory')
@click.pass_context
@handle_errors
def cli(ctx, precision: Optional[int], max_rank: Optional[int], budget: Optional[int],
        output_format: str, verbose: bool, log_file: Optional[str]):
    """carpetlab - Lipschitz invariants of Bedford-McMullen carpets"""
    configure_logging(logging.INFO if verbose else None, Path(log_file) if log_file else None)
    ctx.obj = RunConfig.from_env(
        precision_bits=precision,
        max_rank=max_rank,
        enumeration_budget=budget,
        output_format=output_format,
    )


@cli.command()
@click.argument('file')
@click.pass_obj
@handle_errors
def analyze(config: RunConfig, file: str):
    """Full single-carpet report"""
    spec = read_carpet(file)
    _emit(config, InvariantPipeline(config).analyze(spec))


@cli.command()
@click.argument('file1')
@click.argument('file2')
@click.pass_obj
@handle_errors
def compare(config: RunConfig, file1: str, file2: str):
    """Run the invariant battery on two carpets"""
    specE, specF = read_carpet(file1), read_carpet(file2)
    report = InvariantPipeline(config).compare(specE, specF)
    _emit(config, report.to_dict(config.precision_bits))


@cli.command()
@click.argument('file')
@click.option('--grid', type=int, default=9, help='Number of interior alpha values')
@click.option('--svg', 'svg_out', type=click.Path(dir_okay=False), default=None, help='Write an (alpha, h) plot')
@click.pass_obj
@handle_errors
def spectrum(config: RunConfig, file: str, grid: int, svg_out: Optional[str]):
    """Sample the multifractal spectrum"""
    spec = read_carpet(file)
    curve = spectrum_curve(profile(spec), grid, config.precision_bits)
    if svg_out:
        io_fs("write", svg_out, render_spectrum_svg(curve, config.svg_options))
    _emit(config, curve)


@cli.command('components')
@click.argument('file')
@click.option('--rank', 'k', type=int, required=True, help='Rank of the approximation')
@click.option('--kind', type=click.Choice([kind.value for kind in PieceKind]), default='tilde')
@click.option('--svg', 'svg_out', type=click.Path(dir_okay=False), default=None,
              help='Write the approximation colored by component')
@click.pass_obj
@handle_errors
def components_command(config: RunConfig, file: str, k: int, kind: str, svg_out: Optional[str]):
    """Connected components of a rank-k approximation"""
    spec = read_carpet(file)
    budget = config.enumeration_budget
    partition = components(spec, k, PieceKind(kind), budget)

    payload = {
        "rank": k,
        "kind": partition.kind,
        "pieces": len(partition.pieces),
        "components": partition.count,
        "max_cardinality": partition.max_cardinality,
        "sizes": sorted(partition.sizes, reverse=True),
        "by_rank": component_stats(spec, k, PieceKind(kind), budget),
    }
    if partition.kind is PieceKind.SQUARE and profile(spec).has_vacant_row:
        payload["projection_dichotomy"] = all(
            projection_dichotomy(spec, partition, index) for index in range(partition.count)
        )
    if svg_out:
        options = SvgOptions(color_components=True, kind=kind)
        io_fs("write", svg_out, render_svg(spec, k, options, budget))
    _emit(config, payload)


@cli.command()
@click.argument('file')
@click.option('--depth', 'q', type=int, required=True, help='Mesh size is n^-depth')
@click.option('--rect', 'rect', default=None, help="Restrict to a basic rectangle, e.g. '0:0,2:1'")
@click.pass_obj
@handle_errors
def boxcount(config: RunConfig, file: str, q: int, rect: Optional[str]):
    """Cover box count with its two-sided bound"""
    spec = read_carpet(file)
    restrict = parse_rect(spec, rect) if rect else None
    bounds = box_count_bounds(spec, q, restrict, config.enumeration_budget, config.precision_bits)
    _emit(config, {
        "depth": q,
        "restrict": rect,
        "cover_count": bounds.count,
        "reference": bounds.reference,
        "C2": bounds.c2,
        "lower": bounds.lower,
        "upper": bounds.upper,
        "holds": bounds.holds,
    })


@cli.command()
@click.argument('file1')
@click.argument('file2')
@click.option('--kmax', type=int, default=10, help='Largest k')
@click.option('--prime', type=int, required=True, help='Prime for the valuation column')
@click.pass_obj
@handle_errors
def gamma(config: RunConfig, file1: str, file2: str, kmax: int, prime: int):
    """Table of gamma_k and its p-adic valuations"""
    profE, profF = profile(read_carpet(file1)), profile(read_carpet(file2))
    _emit(config, {
        "prime": prime,
        "rows": gamma_table(profE, profF, kmax, prime),
        "obstruction_primes": obstruction_primes(profE, profF),
    })


@cli.command()
@click.argument('file')
@click.option('--rank', 'k', type=int, required=True, help='Rank of the approximation')
@click.option('--out', 'out', type=click.Path(dir_okay=False), required=True, help='SVG output path')
@click.pass_obj
@handle_errors
def render(config: RunConfig, file: str, k: int, out: str):
    """Render the rank-k basic rectangles as SVG"""
    spec = read_carpet(file)
    io_fs("write", out, render_svg(spec, k, config.svg_options, config.enumeration_budget))
    _emit(config, {"out": out, "rank": k, "cells": len(spec.digits) ** k if k > 0 else 0})


def run(argv=None) -> int:
    """Run the command line and return its exit code"""
    try:
        rv = cli.main(args=argv, prog_name="carpetlab", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return 1
    except click.Abort:
        return 1
    return rv if isinstance(rv, int) else 0
