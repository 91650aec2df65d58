"""
CLI interface for gup-systems.
"""
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from functools import partial
from pathlib import Path

import click
import numpy as np
from pydantic import ValidationError
from tqdm import tqdm

from gup_systems import __version__
from gup_systems.analytic import (
    CoulombBranch,
    coulomb_norm,
    coulomb_wavefunction,
    delta_well_wavefunction,
    linear_wavefunction,
)
from gup_systems.errors import ConvergenceError, ParameterError
from gup_systems.logging_config import get_logger, set_level
from gup_systems.oracle.quadrature import DEFAULT_TOL
from gup_systems.oracle.spectra import (
    COULOMB_SOFTENINGS,
    LINEAR_BOX,
    coulomb_grid,
    coulomb_report,
    delta_grid,
    delta_well_report,
    linear_grid,
    linear_report,
)
from gup_systems.oracle.transfer import DEFAULT_REG_WIDTH, scattering_transfer
from gup_systems.output import FORMATS, render
from gup_systems.params import PhysicalParams, RunConfig
from gup_systems.scattering import transmission_sweep
from gup_systems.stark import METHODS, QUADRATURE, stark_reports
from gup_systems.verify import VerifyContext, run_checks, select_checks

logger = get_logger(__name__)

# pydantic field -> command-line flag, for error messages
FLAGS = {"lam": "--lambda", "fmt": "--format", "out": "--out"}

DELTA_SAMPLE_HALF_WIDTH = 5.0
COULOMB_SAMPLE_WIDTH_PER_LEVEL2 = 4.0


def _flag(loc) -> str:
    if not loc:
        return ""
    name = str(loc[-1])
    return FLAGS.get(name, "--" + name.replace("_", "-"))


@contextmanager
def _usage_errors():
    """Turn validation failures into click usage errors (exit 2)."""
    try:
        yield
    except ValidationError as exc:
        first = exc.errors()[0]
        flag = _flag(first.get("loc"))
        message = f"{flag}: {first.get('msg')}" if flag else first.get("msg")
        raise click.UsageError(message) from exc
    except ParameterError as exc:
        raise click.UsageError(str(exc)) from exc
    except ConvergenceError as exc:
        raise click.ClickException(str(exc)) from exc


def _progress(iterable, total: int, desc: str):
    return tqdm(iterable, total=total, desc=desc, file=sys.stderr, disable=not sys.stderr.isatty(), leave=False)


def _fan_out(job, items, workers: int, desc: str):
    """job over items in input order, on a process pool when workers > 1."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [job(item) for item in _progress(items, len(items), desc)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(_progress(pool.map(job, items), len(items), desc))


def _emit(cfg: RunConfig, rows, checks=None, extra=None) -> None:
    text = render(cfg.fmt, cfg.command, {**cfg.describe(), **(extra or {})}, rows, checks)
    if cfg.out:
        Path(cfg.out).write_text(text)
        logger.info("Wrote %s", cfg.out)
    else:
        click.echo(text, nl=False)


def physical_options(n_max_default: int):
    """Shared flags: physical constants, level range, grid, output."""
    options = [
        click.option("--mass", type=float, default=1.0, show_default=True, help="Particle mass m"),
        click.option("--hbar", type=float, default=1.0, show_default=True, help="Reduced Planck constant"),
        click.option("--lambda", "lam", type=float, default=0.0, show_default=True, help="Deformation parameter"),
        click.option("--slope", type=float, default=1.0, show_default=True, help="Linear-potential force F"),
        click.option("--strength", type=float, default=1.0, show_default=True, help="Delta coupling V"),
        click.option("--kappa", type=float, default=1.0, show_default=True, help="Coulomb coupling"),
        click.option("--charge", type=float, default=1.0, show_default=True, help="Charge e"),
        click.option("--field", type=float, default=0.01, show_default=True, help="Electric field strength"),
        click.option("--n-min", type=int, default=1, show_default=True, help="Lowest level"),
        click.option("--n-max", type=int, default=n_max_default, show_default=True, help="Highest level"),
        click.option("--grid-points", type=int, default=None, help="Grid oracle points (module default if omitted)"),
        click.option("--x-max", type=float, default=None, help="Grid box or sample range (module default if omitted)"),
        click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv", show_default=True),
        click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write to file instead of stdout"),
        click.option("--tolerance", type=float, default=DEFAULT_TOL, show_default=True, help="Quadrature tolerance"),
        click.option("--workers", type=int, default=os.cpu_count() or 1, show_default=True, help="Worker processes"),
    ]

    def decorate(fn):
        for option in reversed(options):
            fn = option(fn)
        return fn

    return decorate


def _config(command: str, opts) -> RunConfig:
    physical = {k: opts.pop(k) for k in ("mass", "hbar", "lam", "slope", "strength", "kappa", "charge", "field")}
    return RunConfig(command=command, params=PhysicalParams(**physical), **opts)


def _sample_points(lo: float, hi: float, samples: int) -> np.ndarray:
    if samples < 2:
        raise ParameterError(f"--samples needs at least 2 points, got {samples}")
    return np.linspace(lo, hi, samples)


def _sample_rows(levels, xs, wavefunction, **labels):
    rows = []
    for n in levels:
        for x in xs:
            rows.append({"n": n, **labels, "x": float(x), "psi": wavefunction(n, float(x))})
    return rows


@click.group()
@click.version_option(__version__)
@click.option("-v", "--verbose", count=True, help="INFO logging; twice for DEBUG")
def cli(verbose):
    """Deformed-momentum 1D quantum systems: closed forms checked against numerical oracles."""
    if verbose:
        set_level(logging.INFO if verbose == 1 else logging.DEBUG)


@cli.command()
@physical_options(n_max_default=5)
@click.option("--samples", type=int, default=0, help="Emit K wavefunction samples per level instead of energies")
@click.option("--richardson/--no-richardson", default=True, show_default=True, help="Extrapolate grid energies")
def linear(samples, richardson, **opts):
    """Linear potential V = F x with a wall at x = 0."""
    with _usage_errors():
        cfg = _config("linear", opts)
        p = cfg.params
        if samples:
            xs = _sample_points(0.0, cfg.x_max or LINEAR_BOX[1], samples)
            rows = _sample_rows(cfg.levels, xs, lambda n, x: linear_wavefunction(n, x, p))
        else:
            grid = linear_grid(cfg.grid_points, cfg.x_max)
            rows = linear_report(p, cfg.n_min, cfg.n_max, grid, richardson).to_rows()
    _emit(cfg, rows, extra={"richardson": richardson, "samples": samples})


@cli.command("delta-well")
@physical_options(n_max_default=1)
@click.option("--samples", type=int, default=0, help="Emit K wavefunction samples instead of the energy")
@click.option("--richardson/--no-richardson", default=False, show_default=True, help="Extrapolate grid energies")
def delta_well(samples, richardson, **opts):
    """Attractive delta well -V delta(x); one bound state."""
    with _usage_errors():
        cfg = _config("delta-well", opts)
        if cfg.levels != [1]:
            raise ParameterError("The delta well has a single bound state; use --n-min 1 --n-max 1")
        p = cfg.params
        if samples:
            half = cfg.x_max or DELTA_SAMPLE_HALF_WIDTH
            xs = _sample_points(-half, half, samples)
            rows = _sample_rows(cfg.levels, xs, lambda n, x: delta_well_wavefunction(x, p))
        else:
            rows = delta_well_report(p, delta_grid(cfg.grid_points, cfg.x_max), richardson).to_rows()
    _emit(cfg, rows, extra={"richardson": richardson, "samples": samples})


@cli.command()
@physical_options(n_max_default=1)
@click.option("--e-min", type=float, default=0.1, show_default=True)
@click.option("--e-max", type=float, default=2.0, show_default=True)
@click.option("--e-steps", type=int, default=20, show_default=True)
@click.option(
    "--reg-width", type=float, default=DEFAULT_REG_WIDTH, show_default=True, help="Transfer-oracle delta width"
)
def barrier(e_min, e_max, e_steps, reg_width, **opts):
    """Delta barrier V delta(x): transmission over an energy sweep."""
    with _usage_errors():
        cfg = _config("barrier", opts)
        if e_steps < 1 or not 0 < e_min <= e_max:
            raise ParameterError(
                f"Energy sweep needs 0 < e_min <= e_max and e_steps >= 1, got {e_min}, {e_max}, {e_steps}"
            )
        if reg_width <= 0:
            raise ParameterError(f"--reg-width must be positive, got {reg_width}")
        energies = [float(e) for e in np.linspace(e_min, e_max, e_steps)]
        analytic = transmission_sweep(energies, cfg.params, workers=cfg.workers)
        job = partial(scattering_transfer, p=cfg.params, reg_width=reg_width)
        oracle = _fan_out(job, energies, cfg.workers, "transfer")
    rows = [
        {
            "energy": r.energy,
            "T": r.T,
            "Rc": r.Rc,
            "excess_exact": r.excess_exact,
            "excess_leading": r.excess_leading,
            "T_transfer": t,
            "Rc_transfer": rc,
        }
        for r, (t, rc) in zip(analytic, oracle)
    ]
    _emit(cfg, rows, extra={"e_min": e_min, "e_max": e_max, "e_steps": e_steps, "reg_width": reg_width})


@cli.command()
@physical_options(n_max_default=3)
@click.option(
    "--softening", type=float, default=COULOMB_SOFTENINGS[-1], show_default=True, help="Grid-oracle softening a"
)
@click.option("--normalized", is_flag=True, help="Unit-norm wavefunctions (samples) or add the norm column")
@click.option("--samples", type=int, default=0, help="Emit K wavefunction samples per level and branch")
@click.option("--richardson/--no-richardson", default=True, show_default=True, help="Extrapolate grid energies")
def coulomb(softening, normalized, samples, richardson, **opts):
    """1D Coulomb potential -kappa/|x|; doubly degenerate levels."""
    with _usage_errors():
        cfg = _config("coulomb", opts)
        p = cfg.params
        if samples:
            half = cfg.x_max or COULOMB_SAMPLE_WIDTH_PER_LEVEL2 * cfg.n_max ** 2
            xs = _sample_points(-half, half, samples)
            rows = []
            for branch in CoulombBranch:
                rows.extend(
                    _sample_rows(
                        cfg.levels,
                        xs,
                        lambda n, x: coulomb_wavefunction(n, branch, x, p, normalized=normalized),
                        branch=branch.value,
                    )
                )
        else:
            grid = coulomb_grid(cfg.n_max, cfg.grid_points, cfg.x_max)
            report = coulomb_report(p, cfg.n_min, cfg.n_max, softening, grid, richardson)
            rows = report.to_rows()
            if normalized:
                for row in rows:
                    row["norm"] = coulomb_norm(row["n"], p)
    _emit(
        cfg,
        rows,
        extra={"softening": softening, "normalized": normalized, "richardson": richardson, "samples": samples},
    )


@cli.command()
@physical_options(n_max_default=3)
@click.option("--method", type=click.Choice(METHODS), default=QUADRATURE, show_default=True)
@click.option("--normalized", is_flag=True, help="Also report h12 for unit-norm states")
def stark(method, normalized, **opts):
    """Stark splitting of the degenerate Coulomb pair."""
    with _usage_errors():
        cfg = _config("stark", opts)
        reports = stark_reports(cfg.levels, cfg.params, method, normalized, cfg.tolerance, workers=cfg.workers)
    _emit(cfg, [r.to_dict() for r in reports], extra={"method": method, "normalized": normalized})


@cli.command()
@click.option("--filter", "pattern", default=None, help="Run checks whose name or group contains TEXT")
@click.option("--tolerance", type=float, default=DEFAULT_TOL, show_default=True, help="Quadrature tolerance")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write to file instead of stdout")
def verify(pattern, tolerance, fmt, out):
    """Run the analytic-vs-oracle check suite; exit 1 if any check fails."""
    with _usage_errors():
        cfg = RunConfig(command="verify", fmt=fmt, out=out, tolerance=tolerance)
    selected = select_checks(pattern)
    if not selected:
        raise click.UsageError(f"No checks match {pattern!r}")

    bar = _progress(None, len(selected), "verify")
    results = run_checks(pattern, VerifyContext(quad_tol=tolerance), progress=lambda c: bar.update(1))
    bar.close()

    _emit(cfg, [], checks=[r.to_dict() for r in results], extra={"filter": pattern})
    failed = [r.name for r in results if not r.passed]
    if failed:
        click.echo(f"FAILED: {', '.join(failed)}", err=True)
        sys.exit(1)
    click.echo(f"All {len(results)} checks passed", err=True)


if __name__ == "__main__":
    cli()
