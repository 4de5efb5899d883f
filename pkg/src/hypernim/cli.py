"""Command-line front end.

Usage:
    hypernim sg --hyper "sym:n=3;lambda=1,2" --pos 5,5,5
    hypernim sg --hyper "sym:n=3;lambda=1" --box 2,2,2
    hypernim jm --hyper "sym:n=5;lambda=2,3" --pos 1,1,0,0,0
    hypernim verify theorem2 --n 8
    hypernim verify jm --hyper "sym:n=4;lambda=2" --box 5,5,5,5
    hypernim spectra --n 4

Verification exit status: 0 when everything holds or is conclusive, 1 when a
discrepancy appears where the theory predicts none, 2 when inconclusive.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import click

from .errors import CacheIntegrityError, HypernimError
from .formats import parse_hypergraph
from .game import format_position, parse_position
from .hypergraph import enumerate_mtf_spectra
from .jm import u_of
from .sg import FORMAT_VERSION, SgTable, sg_on_box, sg_value
from .tetris import tetris_value
from . import verify as V

CACHE_ENV = "HYPERNIM_CACHE_DIR"

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_INCONCLUSIVE = 2


@dataclass
class RunConfig:
    hyper: object = None
    bounds: tuple | None = None
    cache_dir: Path | None = None
    jobs: int = 1


def default_bounds(n: int) -> tuple:
    if n <= 4:
        return (5,) * n
    if n == 5:
        return (4,) * n
    raise click.UsageError(f"n={n}: pass --box explicitly for n >= 6")


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hypernim"


def cache_key(descriptor: str, bounds) -> str:
    payload = json.dumps([FORMAT_VERSION, descriptor, list(bounds)], separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:32]


def load_or_build(config: RunConfig) -> SgTable:
    """SG table for the configured box, reusing a cached copy when present."""
    H = config.hyper
    if config.cache_dir is None:
        return sg_on_box(H, config.bounds, jobs=config.jobs)
    path = config.cache_dir / (cache_key(H.descriptor(), config.bounds) + ".csv")
    if path.exists():
        table = SgTable.read(path, H)
        if tuple(table.bounds) != tuple(config.bounds):
            raise CacheIntegrityError(f"{path}: bounds do not match")
        return table
    table = sg_on_box(H, config.bounds, jobs=config.jobs)
    config.cache_dir.mkdir(parents=True, exist_ok=True)
    table.write(path)
    return table


def _hyper(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_hypergraph(value)
    except HypernimError as exc:
        raise click.BadParameter(str(exc)) from None


def _pos(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_position(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _check_len(H, x, what):
    if len(x) != H.n:
        raise click.UsageError(f"{what} has {len(x)} entries, hypergraph has n={H.n}")


hyper_option = click.option("--hyper", "hyper", callback=_hyper, required=True,
                            help="sym:n=<n>;lambda=<sizes> or explicit JSON / JSON file.")
box_option = click.option("--box", "box", callback=_pos, default=None,
                          help="Per-pile upper bounds, e.g. 5,5,5.")
jobs_option = click.option("--jobs", default=1, show_default=True,
                           type=click.IntRange(min=1), help="Worker processes for box sweeps.")


def _bounds(H, box):
    if box is None:
        return default_bounds(H.n)
    _check_len(H, box, "--box")
    return box


def _emit(report) -> int:
    click.echo(report.to_json(indent=2))
    return report


@click.group()
def cli():
    """Exact solver and verifier for hypergraph NIM."""


@cli.command()
@hyper_option
@click.option("--pos", callback=_pos, default=None, help="Position, e.g. 3,1,2.")
@box_option
@click.option("--cache-dir", type=click.Path(path_type=Path), default=None,
              help=f"Table cache directory (default ${CACHE_ENV} or ~/.cache/hypernim).")
@click.option("--no-cache", is_flag=True, help="Neither read nor write cached tables.")
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help="Also write the stored table and its .json sidecar here.")
@jobs_option
def sg(hyper, pos, box, cache_dir, no_cache, out, jobs):
    """Sprague-Grundy value of a position, or the table of a whole box."""
    if (pos is None) == (box is None):
        raise click.UsageError("give exactly one of --pos and --box")
    if pos is not None:
        _check_len(hyper, pos, "--pos")
        click.echo(sg_value(hyper, pos))
        return
    _check_len(hyper, box, "--box")
    config = RunConfig(hyper, box, None if no_cache else (cache_dir or default_cache_dir()), jobs)
    try:
        table = load_or_build(config)
    except CacheIntegrityError as exc:
        raise click.ClickException(f"cache integrity error: {exc}") from None
    if out is not None:
        table.write(out)
    click.echo(table.expanded_csv(), nl=False)


@cli.command()
@hyper_option
@click.option("--pos", callback=_pos, required=True, help="Position, e.g. 3,1,2.")
def jm(hyper, pos):
    """JM formula breakdown of a position as JSON."""
    _check_len(hyper, pos, "--pos")
    click.echo(json.dumps(u_of(hyper, pos).to_dict(), separators=(",", ":")))


@cli.command()
@hyper_option
@click.option("--pos", callback=_pos, required=True, help="Position, e.g. 3,1,2.")
def tetris(hyper, pos):
    """Tetris value (longest play) of a position."""
    _check_len(hyper, pos, "--pos")
    click.echo(tetris_value(hyper, pos))


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
def spectra(n):
    """Minimal transversal-free spectra over n, one per line."""
    for spec in enumerate_mtf_spectra(n):
        click.echo(str(spec))
    if n < 3:
        click.echo(f"note: n={n} < 3 admits no JM hypergraph", err=True)


@cli.group()
def verify():
    """Run a verification and print its JSON report."""


@verify.command("jm")
@hyper_option
@box_option
@jobs_option
def verify_jm(hyper, box, jobs):
    """JM formula against exact SG values on a box."""
    report = _emit(V.verify_jm_on_box(hyper, _bounds(hyper, box), jobs=jobs))
    if V.predicts_jm(hyper) and not report.holds:
        sys.exit(EXIT_DISCREPANCY)


@verify.command("theorem1")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@box_option
@jobs_option
def verify_t1(n, box, jobs):
    """Every spectrum over n: JM exactly when minimal transversal-free, n >= 3."""
    if box is None:
        bounds = default_bounds(n)
    else:
        if len(box) != n:
            raise click.UsageError(f"--box has {len(box)} entries, expected {n}")
        bounds = box
    report = _emit(V.verify_theorem1(n, bounds, jobs=jobs))
    if report.outcome == V.FAILS:
        sys.exit(EXIT_DISCREPANCY)
    if report.outcome == V.INCONCLUSIVE:
        sys.exit(EXIT_INCONCLUSIVE)


@verify.command("theorem2")
@click.option("--n", "n", type=click.IntRange(min=1, max=12), required=True)
def verify_t2(n):
    """Spectrum conditions against the definition of minimal transversal-free."""
    report = _emit(V.verify_theorem2(n))
    if not report.holds:
        sys.exit(EXIT_DISCREPANCY)


@verify.command("conditions")
@hyper_option
@box_option
def verify_conditions(hyper, box):
    """The sufficient conditions A0, B1, C2, C3 on a box."""
    report = _emit(V.check_conditions(hyper, _bounds(hyper, box)))
    if V.predicts_jm(hyper) and not report.holds:
        sys.exit(EXIT_DISCREPANCY)


@verify.command("tetris-lemmas")
@hyper_option
@box_option
def verify_tetris(hyper, box):
    """Monotonicity, contiguity, exchange and slow-move properties of T."""
    report = _emit(V.check_tetris_lemmas(hyper, _bounds(hyper, box)))
    if not report.holds:
        sys.exit(EXIT_DISCREPANCY)


def main():
    cli()


if __name__ == "__main__":
    main()
