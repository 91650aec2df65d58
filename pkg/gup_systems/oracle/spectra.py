"""
Grid-oracle spectra set against the closed-form levels.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..analytic import coulomb_energy, delta_well_energy, linear_energy
from ..errors import ParameterError
from ..logging_config import get_logger
from ..params import PhysicalParams
from . import potentials
from .grid import Grid, SpectrumReport, spectrum

logger = get_logger(__name__)

# Default boxes; chosen so the bound states are below 1e-8 at the walls
LINEAR_BOX = (0.0, 30.0)
LINEAR_POINTS = 3000
DELTA_HALF_WIDTH = 25.0
DELTA_POINTS = 4000
HARMONIC_HALF_WIDTH = 12.0
HARMONIC_POINTS = 3000
COULOMB_BOX_PER_LEVEL = 60.0
COULOMB_POINTS = 4000
COULOMB_SOFTENINGS = (1e-1, 1e-2, 1e-3)


def _levels(n_min: int, n_max: int) -> List[int]:
    if n_min < 1 or n_max < n_min:
        raise ParameterError(f"Level range must satisfy 1 <= n_min <= n_max, got {n_min}..{n_max}")
    return list(range(n_min, n_max + 1))


def linear_grid(points: Optional[int] = None, x_max: Optional[float] = None) -> Grid:
    return Grid(LINEAR_BOX[0], x_max or LINEAR_BOX[1], points or LINEAR_POINTS)


def delta_grid(points: Optional[int] = None, x_max: Optional[float] = None) -> Grid:
    half = x_max or DELTA_HALF_WIDTH
    return Grid(-half, half, points or DELTA_POINTS)


def harmonic_grid(points: Optional[int] = None, x_max: Optional[float] = None) -> Grid:
    half = x_max or HARMONIC_HALF_WIDTH
    return Grid(-half, half, points or HARMONIC_POINTS)


def coulomb_grid(n_max: int, points: Optional[int] = None, x_max: Optional[float] = None) -> Grid:
    """
    Half line [0, 60 n_max] with a wall at 0.

    Both Coulomb branches vanish at x = 0 and |psi_A| = |psi_B| for x > 0, so
    every level of the symmetric box [-60 n_max, 60 n_max] is the doubly
    degenerate copy of a half-line level. One branch per level is enough.
    """
    return Grid(0.0, x_max or COULOMB_BOX_PER_LEVEL * n_max, points or COULOMB_POINTS)


def linear_report(
    p: PhysicalParams,
    n_min: int = 1,
    n_max: int = 5,
    grid: Optional[Grid] = None,
    richardson: bool = True,
) -> SpectrumReport:
    levels = _levels(n_min, n_max)
    grid = grid or linear_grid()
    oracle = spectrum(potentials.linear(p.slope), p, grid, n_max, richardson)
    return SpectrumReport(
        kind="linear",
        levels=levels,
        analytic=[linear_energy(n, p) for n in levels],
        oracle=[float(oracle[n - 1]) for n in levels],
        grid=grid.to_dict(),
        richardson=richardson,
    )


def delta_well_report(
    p: PhysicalParams, grid: Optional[Grid] = None, richardson: bool = False
) -> SpectrumReport:
    """Single bound level of the spike-regularized well."""
    grid = grid or delta_grid()
    oracle = spectrum(potentials.spike(p.strength), p, grid, 1, richardson)
    return SpectrumReport(
        kind="delta-well",
        levels=[1],
        analytic=[delta_well_energy(p)],
        oracle=[float(oracle[0])],
        grid=grid.to_dict(),
        richardson=richardson,
    )


def harmonic_report(
    p: PhysicalParams, omega: float = 1.0, levels: int = 1, grid: Optional[Grid] = None, richardson: bool = True
) -> SpectrumReport:
    """Calibration against hbar omega (k + 1/2) - lambda^2/2m."""
    grid = grid or harmonic_grid()
    oracle = spectrum(potentials.harmonic(p.mass, omega), p, grid, levels, richardson)
    analytic = [p.hbar * omega * (k + 0.5) + p.gauge_shift for k in range(levels)]
    return SpectrumReport(
        kind="harmonic",
        levels=list(range(levels)),
        analytic=analytic,
        oracle=[float(e) for e in oracle],
        grid=grid.to_dict(),
        richardson=richardson,
    )


def coulomb_report(
    p: PhysicalParams,
    n_min: int = 1,
    n_max: int = 3,
    softening: float = COULOMB_SOFTENINGS[-1],
    grid: Optional[Grid] = None,
    richardson: bool = True,
) -> SpectrumReport:
    """
    Softened Coulomb levels on the half-line grid against E_n.

    The half line stands in for the full line: the A/B pair is degenerate
    and each partner is the reflection of the other up to sign, so the
    distinct eigenvalues are the same on both.
    """
    levels = _levels(n_min, n_max)
    grid = grid or coulomb_grid(n_max)
    oracle = spectrum(potentials.softened_coulomb(p.kappa, softening), p, grid, n_max, richardson)
    return SpectrumReport(
        kind="coulomb",
        levels=levels,
        analytic=[coulomb_energy(n, p) for n in levels],
        oracle=[float(oracle[n - 1]) for n in levels],
        grid={**grid.to_dict(), "softening": softening},
        richardson=richardson,
    )


@dataclass
class SofteningTrend:
    """Grid energies of the softened Coulomb problem as the softening shrinks."""

    softenings: List[float]
    levels: List[int]
    analytic: List[float]
    energies: List[List[float]] = field(default_factory=list)

    @property
    def monotone(self) -> bool:
        """Each level is non-increasing as the softening decreases."""
        table = np.asarray(self.energies)
        return bool(np.all(np.diff(table, axis=0) <= 0.0))

    @property
    def distances(self) -> List[List[float]]:
        return [[abs(e - a) for e, a in zip(row, self.analytic)] for row in self.energies]

    def to_rows(self) -> List[Dict[str, Any]]:
        rows = []
        for a, row in zip(self.softenings, self.energies):
            for n, e, exact in zip(self.levels, row, self.analytic):
                rows.append({"softening": a, "n": n, "energy_oracle": e, "energy_analytic": exact})
        return rows


def coulomb_softening_trend(
    p: PhysicalParams,
    n_max: int = 3,
    softenings: Sequence[float] = COULOMB_SOFTENINGS,
    grid: Optional[Grid] = None,
) -> SofteningTrend:
    """
    Energies for each softening, largest first.

    Raw grid energies are used: the diagonal only decreases as the
    softening shrinks, so each level is non-increasing.
    """
    levels = _levels(1, n_max)
    grid = grid or coulomb_grid(n_max)
    ordered = sorted(softenings, reverse=True)
    trend = SofteningTrend(
        softenings=list(ordered),
        levels=levels,
        analytic=[coulomb_energy(n, p) for n in levels],
    )
    for a in ordered:
        energies = spectrum(potentials.softened_coulomb(p.kappa, a), p, grid, n_max, richardson=False)
        trend.energies.append([float(e) for e in energies])
        logger.debug("softening %g: %s", a, trend.energies[-1])
    return trend
