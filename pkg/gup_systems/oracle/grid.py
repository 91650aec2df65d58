"""
Finite-difference diagonalization of the deformed Hamiltonian.

H = -(hbar^2/2m) D2 + (lambda/m)(-i hbar) D1 + V on a uniform grid with
Dirichlet walls. The complex Hermitian tridiagonal matrix is carried to a
real symmetric one by a diagonal phase transform and solved with LAPACK's
tridiagonal eigensolver; a dense path is kept for small grids.
"""
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple, Union

import numpy as np
from scipy.linalg import LinAlgError, eigh, eigh_tridiagonal

from ..errors import ConvergenceError, ParameterError
from ..logging_config import get_logger
from ..params import PhysicalParams

logger = get_logger(__name__)

MIN_POINTS = 16

Sampler = Callable[[np.ndarray], Union[np.ndarray, float]]


@dataclass(frozen=True)
class Grid:
    """Uniform nodes x_min..x_max inclusive; the two end nodes are the walls."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise ParameterError(f"Grid needs x_min < x_max, got [{self.x_min}, {self.x_max}]")
        if self.n_points < MIN_POINTS:
            raise ParameterError(f"Grid needs at least {MIN_POINTS} points, got {self.n_points}")

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    def refined(self) -> "Grid":
        """Same box with half the spacing."""
        return Grid(self.x_min, self.x_max, 2 * self.n_points - 1)

    def to_dict(self) -> Dict[str, Any]:
        return {"x_min": self.x_min, "x_max": self.x_max, "n_points": self.n_points, "spacing": self.spacing}


@dataclass
class GridHamiltonian:
    """Tridiagonal storage of H on the interior nodes."""

    grid: Grid
    diagonal: np.ndarray
    upper: np.ndarray
    lower: np.ndarray

    @property
    def dimension(self) -> int:
        return len(self.diagonal)

    def hermiticity_residual(self) -> float:
        """max |H_ij - conj(H_ji)| over the stored entries."""
        if self.dimension < 2:
            return 0.0
        return float(np.max(np.abs(self.upper - np.conj(self.lower))))

    def to_dense(self) -> np.ndarray:
        dense = np.diag(self.diagonal.astype(complex))
        dense += np.diag(self.upper, 1) + np.diag(self.lower, -1)
        return dense


def sample_potential(potential: Union[Sampler, np.ndarray], grid: Grid) -> np.ndarray:
    """
    Potential values at every grid node.

    ``potential`` is either a callable taking the full node array or an
    array already sampled on it.
    """
    x = grid.points
    if callable(potential):
        values = np.asarray(potential(x), dtype=float)
    else:
        values = np.asarray(potential, dtype=float)
    values = np.broadcast_to(values, x.shape).astype(float)
    if not np.all(np.isfinite(values)):
        bad = x[~np.isfinite(values)][0]
        raise ParameterError(f"Potential is not finite at x = {bad}; regularize it first")
    return values


def build_hamiltonian(
    potential: Union[Sampler, np.ndarray], p: PhysicalParams, grid: Grid
) -> GridHamiltonian:
    """
    Assemble H with the central stencils D2 and antisymmetric D1.

    Raises:
        ParameterError: the potential has a non-finite sample
    """
    values = sample_potential(potential, grid)
    h = grid.spacing
    kinetic = p.hbar ** 2 / (2.0 * p.mass * h * h)
    drift = p.hbar * p.lam / (2.0 * p.mass * h)
    interior = values[1:-1]
    n_off = len(interior) - 1
    diagonal = 2.0 * kinetic + interior
    upper = np.full(n_off, complex(-kinetic, -drift))
    lower = np.full(n_off, complex(-kinetic, drift))
    return GridHamiltonian(grid=grid, diagonal=diagonal, upper=upper, lower=lower)


def _fix_phase(vector: np.ndarray) -> np.ndarray:
    peak = vector[np.argmax(np.abs(vector))]
    return vector * (np.conj(peak) / abs(peak))


def eigen_lowest(
    hamiltonian: GridHamiltonian, k: int, method: str = "tridiagonal"
) -> List[Tuple[float, np.ndarray]]:
    """
    The k lowest eigenpairs, ascending.

    Wavefunctions are returned on the full grid (walls included, value 0)
    and normalized so that sum |psi|^2 h = 1.

    Args:
        hamiltonian: Matrix from build_hamiltonian
        k: Number of levels
        method: "tridiagonal" (phase transform + LAPACK stemr) or "dense"

    Raises:
        ParameterError: k outside 1..dimension or unknown method
        ConvergenceError: LAPACK failure
    """
    dim = hamiltonian.dimension
    if not 1 <= k <= dim:
        raise ParameterError(f"Requested {k} levels from a matrix of dimension {dim}")

    try:
        if method == "tridiagonal":
            magnitude = np.abs(hamiltonian.upper)
            # off-diagonals never vanish: the kinetic term is strictly positive
            phase = hamiltonian.upper / magnitude
            transform = np.concatenate([[1.0 + 0j], np.cumprod(np.conj(phase))])
            energies, vectors = eigh_tridiagonal(
                hamiltonian.diagonal, magnitude, select="i", select_range=(0, k - 1)
            )
            vectors = transform[:, None] * vectors
        elif method == "dense":
            energies, vectors = eigh(hamiltonian.to_dense(), subset_by_index=[0, k - 1])
        else:
            raise ParameterError(f"Unknown eigen method: {method}")
    except LinAlgError as exc:
        raise ConvergenceError(f"Eigen-solve of dimension {dim} failed: {exc}") from exc

    logger.debug("eigen_lowest: dim=%d k=%d method=%s", dim, k, method)
    h = hamiltonian.grid.spacing
    pairs = []
    for i in range(k):
        psi = np.zeros(dim + 2, dtype=complex)
        psi[1:-1] = _fix_phase(vectors[:, i]) / np.sqrt(h)
        pairs.append((float(energies[i]), psi))
    return pairs


def grid_energies(
    potential: Union[Sampler, np.ndarray], p: PhysicalParams, grid: Grid, k: int
) -> np.ndarray:
    """Lowest k eigenvalues, without vectors."""
    hamiltonian = build_hamiltonian(potential, p, grid)
    magnitude = np.abs(hamiltonian.upper)
    try:
        energies = eigh_tridiagonal(
            hamiltonian.diagonal, magnitude, eigvals_only=True, select="i", select_range=(0, k - 1)
        )
    except LinAlgError as exc:
        raise ConvergenceError(f"Eigen-solve on {grid.n_points} points failed: {exc}") from exc
    return np.asarray(energies)


def richardson_spectrum(potential: Sampler, p: PhysicalParams, grid: Grid, k: int) -> np.ndarray:
    """
    (4 E(h/2) - E(h)) / 3 from the grid and its refinement.

    ``potential`` must be a callable so it can be resampled on the finer grid.
    """
    if not callable(potential):
        raise ParameterError("Richardson extrapolation needs a callable potential")
    coarse = grid_energies(potential, p, grid, k)
    fine = grid_energies(potential, p, grid.refined(), k)
    return (4.0 * fine - coarse) / 3.0


def spectrum(
    potential: Sampler, p: PhysicalParams, grid: Grid, k: int, richardson: bool = True
) -> np.ndarray:
    if richardson:
        return richardson_spectrum(potential, p, grid, k)
    return grid_energies(potential, p, grid, k)


@dataclass
class SpectrumReport:
    """Analytic and oracle energies side by side."""

    kind: str
    levels: List[int]
    analytic: List[float]
    oracle: List[float]
    abs_errors: List[float] = field(default_factory=list)
    rel_errors: List[float] = field(default_factory=list)
    grid: Dict[str, Any] = field(default_factory=dict)
    richardson: bool = True

    def __post_init__(self):
        if not len(self.levels) == len(self.analytic) == len(self.oracle):
            raise ParameterError("Spectrum lists must have equal length")
        if not self.abs_errors:
            self.abs_errors = [abs(a - o) for a, o in zip(self.analytic, self.oracle)]
        if not self.rel_errors:
            self.rel_errors = [
                abs(a - o) / abs(a) if a != 0 else abs(a - o) for a, o in zip(self.analytic, self.oracle)
            ]

    @property
    def max_abs_error(self) -> float:
        return max(self.abs_errors) if self.abs_errors else 0.0

    def to_rows(self) -> List[Dict[str, Any]]:
        return [
            {
                "n": n,
                "energy_analytic": a,
                "energy_oracle": o,
                "abs_error": da,
                "rel_error": dr,
            }
            for n, a, o, da, dr in zip(self.levels, self.analytic, self.oracle, self.abs_errors, self.rel_errors)
        ]
