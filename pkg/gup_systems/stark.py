"""
Stark splitting of the degenerate Coulomb pair psi_A, psi_B.

The perturbation e*E*x couples the two partners; its 2x2 matrix has zero
diagonal by parity, so the level splits symmetrically by +-h12. Matrix
elements use the unnormalized states unless ``normalized``
is requested.
"""
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import partial
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .analytic import (
    ComplexAmplitude,
    CoulombBranch,
    coulomb_decay_rate,
    coulomb_energy,
    coulomb_norm_quadrature,
    coulomb_wavefunction,
    gauge_phase,
)
from .errors import ParameterError
from .logging_config import get_logger
from .oracle.quadrature import DEFAULT_TOL, adaptive_quadrature_complex
from .params import PhysicalParams
from .specfun import kummer_1f1

logger = get_logger(__name__)

CLOSED_FORM = "closed_form"
QUADRATURE = "quadrature"
METHODS = (CLOSED_FORM, QUADRATURE)

@dataclass
class StarkReport:
    """Matrix elements and corrections for level n."""

    n: int
    method: str
    h11: float
    h22: float
    h12: float
    h21: float
    e1_first: float
    e2_first: float
    e1_second: float
    e2_second: float
    total_plus: float
    total_minus: float
    # the "second order" values are expectations in the rotated basis
    caveat: bool = True
    normalized_h12: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _check(n: int, method: str) -> None:
    if n < 1:
        raise ParameterError(f"Level index must be >= 1, got {n}")
    if method not in METHODS:
        raise ParameterError(f"Unknown method {method!r}; expected one of {METHODS}")


def closed_form_h12(n: int, p: PhysicalParams) -> float:
    """3 eE hbar^8 n^5 / (4 kappa^4 m^4)."""
    return 3.0 * p.e_field * p.hbar ** 8 * n ** 5 / (4.0 * p.kappa ** 4 * p.mass ** 4)


def _half_line(n: int, p: PhysicalParams, integrand, tol: float) -> complex:
    """Integral over [0, inf) mapped to [0, 1) with the n/c length scale of the norm."""
    value, _ = adaptive_quadrature_complex(
        integrand, 0.0, math.inf, tol=tol, scale=n / coulomb_decay_rate(n, p)
    )
    return value


def _full_line(n: int, p: PhysicalParams, integrand, tol: float) -> complex:
    """Integral over the real line as two half lines; x -> -u on the left."""
    left = _half_line(n, p, lambda u: integrand(-u), tol)
    return left + _half_line(n, p, integrand, tol)


def _element(
    n: int, bra: CoulombBranch, ket: CoulombBranch, p: PhysicalParams, normalized: bool, tol: float
) -> complex:
    def integrand(x: float) -> complex:
        left = coulomb_wavefunction(n, bra, x, p, normalized=normalized)
        right = coulomb_wavefunction(n, ket, x, p, normalized=normalized)
        return left.conjugate() * x * right

    return p.e_field * _full_line(n, p, integrand, tol)


def stark_matrix(
    n: int, p: PhysicalParams, method: str = QUADRATURE, normalized: bool = False, tol: float = DEFAULT_TOL
) -> np.ndarray:
    """
    The 2x2 matrix <psi_i| eE x |psi_j> over (psi_A, psi_B).

    The closed form has zero diagonal by parity; the quadrature path
    evaluates all four entries.
    """
    _check(n, method)
    if method == CLOSED_FORM:
        h12 = closed_form_h12(n, p)
        if normalized:
            h12 /= coulomb_norm_quadrature(n, p)
        return np.array([[0.0, h12], [h12, 0.0]])

    branches = (CoulombBranch.A, CoulombBranch.B)
    matrix = np.zeros((2, 2))
    for i, bra in enumerate(branches):
        for j, ket in enumerate(branches):
            element = _element(n, bra, ket, p, normalized, tol)
            # imaginary parts cancel: the gauge phases pair up as conjugates
            matrix[i, j] = element.real
    return matrix


def stark_matrix_element(
    n: int, p: PhysicalParams, method: str = CLOSED_FORM, tol: float = DEFAULT_TOL
) -> float:
    """
    H'_12 for level n.

    Raises:
        ParameterError: n < 1 or unknown method
        QuadratureError: quadrature did not converge
    """
    _check(n, method)
    if method == CLOSED_FORM:
        return closed_form_h12(n, p)
    return float(np.real(_element(n, CoulombBranch.A, CoulombBranch.B, p, False, tol)))


def secular_roots(matrix: np.ndarray) -> Tuple[float, float]:
    """
    Roots of det(H' - E I) = 0 for a real symmetric 2x2 matrix.

    Returns (e1, e2) where e1 belongs to the eigenvector closest to
    (1, 1)/sqrt(2), the symmetric combination.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (2, 2):
        raise ParameterError(f"Secular problem needs a 2x2 matrix, got {matrix.shape}")
    values, vectors = np.linalg.eigh(matrix)
    symmetric = np.array([1.0, 1.0]) / math.sqrt(2.0)
    overlaps = np.abs(vectors.T @ symmetric)
    first = int(np.argmax(overlaps))
    return float(values[first]), float(values[1 - first])


def stark_first_order(n: int, p: PhysicalParams, method: str = CLOSED_FORM) -> Tuple[float, float]:
    """(E1, E2) = (+h12, -h12)."""
    return secular_roots(stark_matrix(n, p, method))


def stark_split_wavefunction(n: int, which: int, x: float, p: PhysicalParams) -> ComplexAmplitude:
    """
    phi_n1 = (psi_A + psi_B)/sqrt(2), living on x > 0, or
    phi_n2 = (psi_A - psi_B)/sqrt(2), living on x < 0.
    """
    if which not in (1, 2):
        raise ParameterError(f"which must be 1 or 2, got {which}")
    if n < 1:
        raise ParameterError(f"Level index must be >= 1, got {n}")
    c = coulomb_decay_rate(n, p)
    if which == 1:
        if x <= 0:
            return 0j
        return math.sqrt(2.0) * x * math.exp(-c * x) * kummer_1f1(1 - n, 2, 2.0 * c * x) * gauge_phase(x, p)
    if x >= 0:
        return 0j
    return -math.sqrt(2.0) * x * math.exp(c * x) * kummer_1f1(1 - n, 2, -2.0 * c * x) * gauge_phase(x, p)


def stark_second_order(
    n: int, p: PhysicalParams, method: str = QUADRATURE, tol: float = DEFAULT_TOL
) -> Tuple[float, float]:
    """
    <phi_n1|eE x|phi_n1> and <phi_n2|eE x|phi_n2>.

    These are expectation values in the rotated basis and coincide with the
    first-order splitting; reports built from them carry ``caveat=True``.
    """
    _check(n, method)
    if method == CLOSED_FORM:
        h12 = closed_form_h12(n, p)
        return h12, -h12

    def expectation(which: int, sign: float) -> float:
        def integrand(u: float) -> complex:
            x = sign * u
            phi = stark_split_wavefunction(n, which, x, p)
            return phi.conjugate() * phi * x

        return p.e_field * _half_line(n, p, integrand, tol).real

    return expectation(1, 1.0), expectation(2, -1.0)


def stark_total_energies(n: int, p: PhysicalParams) -> Tuple[float, float]:
    """E_n +- 3 eE hbar^8 n^5 / (2 kappa^4 m^4), first plus second order."""
    base = coulomb_energy(n, p)
    first_plus, first_minus = stark_first_order(n, p, CLOSED_FORM)
    second_plus, second_minus = stark_second_order(n, p, CLOSED_FORM)
    return base + first_plus + second_plus, base + first_minus + second_minus


def stark_report(
    n: int, p: PhysicalParams, method: str = QUADRATURE, normalized: bool = False, tol: float = DEFAULT_TOL
) -> StarkReport:
    """Every Stark quantity for level n, computed with ``method``."""
    _check(n, method)
    matrix = stark_matrix(n, p, method, tol=tol)
    e1, e2 = secular_roots(matrix)
    s1, s2 = stark_second_order(n, p, method, tol=tol)
    base = coulomb_energy(n, p)
    report = StarkReport(
        n=n,
        method=method,
        h11=float(matrix[0, 0]),
        h22=float(matrix[1, 1]),
        h12=float(matrix[0, 1]),
        h21=float(matrix[1, 0]),
        e1_first=e1,
        e2_first=e2,
        e1_second=s1,
        e2_second=s2,
        total_plus=base + e1 + s1,
        total_minus=base + e2 + s2,
    )
    if normalized:
        report.normalized_h12 = float(stark_matrix(n, p, method, normalized=True, tol=tol)[0, 1])
    logger.debug("stark n=%d %s: h12=%.17g", n, method, report.h12)
    return report


def stark_reports(
    levels: Sequence[int],
    p: PhysicalParams,
    method: str = QUADRATURE,
    normalized: bool = False,
    tol: float = DEFAULT_TOL,
    workers: int = 1,
) -> List[StarkReport]:
    """stark_report for several levels, in input order."""
    job = partial(stark_report, p=p, method=method, normalized=normalized, tol=tol)
    if workers <= 1 or len(levels) < 2:
        return [job(n) for n in levels]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(job, levels))
