"""
Named verification checks, grouped by module.

Each check measures one number and compares it with a tolerance. The
``verify`` subcommand runs them all (or a filtered subset) and exits
non-zero if any fails.
"""
import cmath
import math
from dataclasses import asdict, dataclass
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from . import analytic, scattering, specfun, stark
from .errors import GupError
from .logging_config import get_logger
from .oracle import potentials
from .oracle.convergence import convergence_order, loglog_slope
from .oracle.grid import Grid, build_hamiltonian, eigen_lowest, grid_energies, richardson_spectrum
from .oracle.quadrature import DEFAULT_TOL, adaptive_quadrature
from .oracle.residual import ode_residual, richardson_derivatives
from .oracle.spectra import (
    coulomb_softening_trend,
    delta_grid,
    delta_well_report,
    harmonic_report,
    linear_grid,
    linear_report,
)
from .oracle.transfer import scattering_transfer
from .params import PhysicalParams

logger = get_logger(__name__)

# Published values of the first five zeros of Ai
PUBLISHED_AIRY_ZEROS = (-2.33810, -4.08794, -5.52055, -6.78670, -7.94413)

RANDOM_SEED = 20240601
UNIT = PhysicalParams()


@dataclass
class Measurement:
    value: float
    tolerance: float
    at_least: bool = False
    detail: str = ""


@dataclass
class CheckResult:
    name: str
    group: str
    passed: bool
    value: float
    tolerance: float
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class VerifyContext:
    quad_tol: float = DEFAULT_TOL


@dataclass
class Check:
    name: str
    group: str
    run: Callable[[VerifyContext], Measurement]


CHECKS: Dict[str, Check] = {}


def check(group: str):
    """Register the decorated function as a check named after it."""

    def register(fn: Callable[[VerifyContext], Measurement]):
        CHECKS[fn.__name__] = Check(fn.__name__, group, fn)
        return fn

    return register


def _violations(values, strictly_increasing: bool = True) -> int:
    diffs = np.diff(np.asarray(values, dtype=float))
    return int(np.sum(diffs <= 0)) if strictly_increasing else int(np.sum(diffs > 0))


# --- specfun ----------------------------------------------------------------

@check("specfun")
def airy_zeros_match_published(ctx: VerifyContext) -> Measurement:
    table = specfun.airy_zeros(5)
    worst = max(abs(table[n] - a) for n, a in enumerate(PUBLISHED_AIRY_ZEROS, start=1))
    return Measurement(worst, 1e-5)


@check("specfun")
def airy_zero_residual(ctx: VerifyContext) -> Measurement:
    indices = list(range(1, 11)) + [25, 50, 100]
    worst = max(abs(specfun.airy_ai(specfun.airy_zero(n))) for n in indices)
    return Measurement(worst, 1e-12, detail=f"n in {indices}")


@check("specfun")
def airy_ode_residual(ctx: VerifyContext) -> Measurement:
    rng = np.random.default_rng(RANDOM_SEED)
    worst = 0.0
    for fn, hi in ((specfun.airy_ai, 5.0), (specfun.airy_bi, 3.0)):
        for x in rng.uniform(-10.0, hi, 200):
            _, second = richardson_derivatives(fn, float(x), step=0.1)
            worst = max(worst, abs(second - x * fn(float(x))))
    return Measurement(worst, 1e-8)


@check("specfun")
def airy_wronskian(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for x in np.linspace(-5.0, 3.0, 81):
        x = float(x)
        w = specfun.airy_ai(x) * specfun.airy_bi_prime(x) - specfun.airy_ai_prime(x) * specfun.airy_bi(x)
        worst = max(worst, abs(w - 1.0 / math.pi))
    return Measurement(worst, 1e-10)


@check("specfun")
def airy_derivative_consistency(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for x in np.linspace(-8.0, 5.0, 27):
        first, _ = richardson_derivatives(specfun.airy_ai, float(x), step=0.1)
        worst = max(worst, abs(first - specfun.airy_ai_prime(float(x))))
    return Measurement(worst, 1e-7)


@check("specfun")
def kummer_ode_residual(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for n in range(1, 13):
        for z in np.linspace(0.5, 40.0, 80):
            worst = max(worst, specfun.kummer_residual(1 - n, 2, float(z)))
    return Measurement(worst, 1e-10)


@check("specfun")
def laguerre_recurrence_vs_kummer(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for n in range(0, 13):
        for z in np.linspace(0.0, 40.0, 81):
            z = float(z)
            scale = specfun.laguerre(n, 1.0, -z)
            diff = abs(specfun.laguerre(n, 1.0, z) - specfun.laguerre_from_kummer(n, 1.0, z))
            worst = max(worst, diff / scale)
    return Measurement(worst, 1e-12)


@check("specfun")
def laguerre_overlap_vs_quadrature(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for alpha in (2.0, 3.0):
        for n in range(0, 11):
            closed = specfun.laguerre_overlap_closed_form(alpha, n, 1.0)
            numeric = specfun.laguerre_overlap_quadrature(alpha, n, 1.0, tol=min(ctx.quad_tol, 1e-11))
            worst = max(worst, abs(closed - numeric) / abs(numeric))
    return Measurement(worst, 1e-9)


@check("specfun")
def lanczos_gamma(ctx: VerifyContext) -> Measurement:
    points = [0.1, 0.5, 1.0, 1.5, 2.0, 3.3, 5.0, 7.25, 10.0, 20.5, -0.5, -1.5, -2.7]
    worst = max(abs(specfun.gamma(x) - math.gamma(x)) / abs(math.gamma(x)) for x in points)
    return Measurement(worst, 1e-13)


# --- analytic ---------------------------------------------------------------

def _energies(p: PhysicalParams) -> List[float]:
    values = [analytic.linear_energy(n, p) for n in range(1, 6)]
    values.append(analytic.delta_well_energy(p))
    values.extend(analytic.coulomb_energy(n, p) for n in range(1, 6))
    return values


@check("analytic")
def gauge_energy_shift(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    base = _energies(UNIT)
    for lam in (0.5, 1.0, -0.7):
        p = UNIT.with_lambda(lam)
        expected = -lam ** 2 / (2.0 * p.mass)
        worst = max(worst, max(abs(e - b - expected) for e, b in zip(_energies(p), base)))
    return Measurement(worst, 1e-12)


@check("analytic")
def gauge_wavefunction_phase(ctx: VerifyContext) -> Measurement:
    lam = 0.8
    p = UNIT.with_lambda(lam)
    cases = [
        (lambda x, q: analytic.linear_wavefunction(2, x, q), np.linspace(0.1, 8.0, 25)),
        (lambda x, q: analytic.delta_well_wavefunction(x, q), np.linspace(-4.0, 4.0, 25)),
        (lambda x, q: analytic.coulomb_wavefunction(3, "A", x, q), np.linspace(-15.0, 15.0, 25)),
        (lambda x, q: analytic.coulomb_wavefunction(3, "B", x, q), np.linspace(-15.0, 15.0, 25)),
    ]
    worst = 0.0
    for fn, xs in cases:
        scale = max(abs(fn(float(x), UNIT)) for x in xs)
        for x in xs:
            x = float(x)
            expected = cmath.exp(-1j * lam * x / p.hbar) * fn(x, UNIT)
            worst = max(worst, abs(fn(x, p) - expected) / scale)
    return Measurement(worst, 1e-12)


@check("analytic")
def linear_ode_residual(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for lam in (0.0, 0.5):
        p = UNIT.with_lambda(lam)
        for n in range(1, 6):
            a_n = specfun.airy_zero(n)
            s = analytic.linear_length_scale(p)
            # keep the Airy argument on the series side
            points = np.linspace(0.25, (4.0 - a_n) / s, 20)
            state = analytic.bound_state("linear", n, p)
            worst = max(worst, ode_residual(state, state.energy, analytic.potential("linear", p), p, points))
    return Measurement(worst, 1e-7)


@check("analytic")
def delta_well_ode_residual(ctx: VerifyContext) -> Measurement:
    p = UNIT.with_lambda(0.7)
    state = analytic.bound_state("delta-well", 1, p)
    points = np.concatenate([np.linspace(-5.0, -0.5, 25), np.linspace(0.5, 5.0, 25)])
    return Measurement(ode_residual(state, state.energy, analytic.potential("delta-well", p), p, points), 1e-7)


@check("analytic")
def coulomb_ode_residual(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for lam in (0.0, 0.5):
        p = UNIT.with_lambda(lam)
        for n in range(1, 5):
            half = np.linspace(0.5, 8.0 * n, 25)
            points = np.concatenate([-half[::-1], half])
            for branch in analytic.CoulombBranch:
                state = analytic.bound_state("coulomb", n, p, branch=branch)
                residual = ode_residual(state, state.energy, analytic.potential("coulomb", p), p, points)
                worst = max(worst, residual)
    return Measurement(worst, 1e-7)


@check("analytic")
def delta_well_step_equation(ctx: VerifyContext) -> Measurement:
    p = UNIT.with_lambda(0.7)
    return Measurement(analytic.delta_well_step_residual(p) / abs(analytic.delta_well_wavefunction(0.0, p)), 1e-10)


@check("analytic")
def linear_normalization(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for n in range(1, 4):
        value, _ = adaptive_quadrature(
            lambda x: abs(analytic.linear_wavefunction(n, x, UNIT)) ** 2, 0.0, 30.0, tol=ctx.quad_tol
        )
        worst = max(worst, abs(value - 1.0))
    return Measurement(worst, 1e-8)


@check("analytic")
def delta_well_normalization(ctx: VerifyContext) -> Measurement:
    p = UNIT.with_lambda(0.4)
    half, _ = adaptive_quadrature(
        lambda x: abs(analytic.delta_well_wavefunction(x, p)) ** 2, 0.0, math.inf, tol=ctx.quad_tol
    )
    return Measurement(abs(2.0 * half - 1.0), 1e-10)


@check("analytic")
def linear_orthogonality(ctx: VerifyContext) -> Measurement:
    p = UNIT.with_lambda(0.5)
    worst = 0.0
    for m in range(1, 6):
        for n in range(m + 1, 6):
            def overlap(x: float) -> complex:
                return analytic.linear_wavefunction(m, x, p).conjugate() * analytic.linear_wavefunction(n, x, p)

            # the exact value is zero, so only an absolute target is reachable
            real, _ = adaptive_quadrature(lambda x: overlap(x).real, 0.0, 30.0, tol=1e-9, abs_tol=1e-10)
            imag, _ = adaptive_quadrature(lambda x: overlap(x).imag, 0.0, 30.0, tol=1e-9, abs_tol=1e-10)
            worst = max(worst, abs(complex(real, imag)))
    return Measurement(worst, 1e-6)


@check("analytic")
def linear_quantization_condition(ctx: VerifyContext) -> Measurement:
    p = UNIT.with_lambda(0.3)
    worst = max(abs(analytic.linear_quantization_residual(analytic.linear_energy(n, p), p)) for n in range(1, 6))
    return Measurement(worst, 1e-12)


@check("analytic")
def energy_monotonicity(ctx: VerifyContext) -> Measurement:
    linear = [analytic.linear_energy(n, UNIT) for n in range(1, 11)]
    coulomb = [analytic.coulomb_energy(n, UNIT) for n in range(1, 11)]
    return Measurement(_violations(linear) + _violations(coulomb), 0, detail="count of non-increasing steps")


@check("analytic")
def coulomb_norm_closed_form(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for n in range(1, 7):
        closed = analytic.coulomb_norm(n, UNIT)
        worst = max(worst, abs(analytic.coulomb_norm_quadrature(n, UNIT) - closed) / closed)
    return Measurement(worst, 1e-9)


# --- scattering -------------------------------------------------------------

def _random_triples(count: int = 1000):
    rng = np.random.default_rng(RANDOM_SEED)
    energies = rng.uniform(0.01, 10.0, count)
    strengths = rng.uniform(0.01, 10.0, count)
    lambdas = rng.uniform(-3.0, 3.0, count)
    return [
        (float(e), UNIT.with_updates(strength=float(v), lam=float(l)))
        for e, v, l in zip(energies, strengths, lambdas)
    ]


@check("scattering")
def barrier_unitarity(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for e, p in _random_triples():
        result = scattering.barrier_amplitudes(e, p)
        worst = max(worst, abs(result.T + result.Rc - 1.0))
    return Measurement(worst, 1e-12)


@check("scattering")
def barrier_energy_shift(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for e, p in _random_triples():
        shifted = scattering.undeformed_transmission(e + p.lam ** 2 / (2.0 * p.mass), p)
        worst = max(worst, abs(scattering.transmission(e, p) - shifted))
    return Measurement(worst, 1e-14)


@check("scattering")
def barrier_continuity(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for e, p in _random_triples(200):
        s, r = scattering.amplitudes(e, p)
        worst = max(worst, abs(1.0 + r - s))
    return Measurement(worst, 1e-14)


@check("scattering")
def barrier_wavenumber_split(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for e, p in _random_triples(200):
        k_plus, k_minus = scattering.wavenumbers(e, p)
        worst = max(worst, abs(k_minus - k_plus - 2.0 * p.lam / p.hbar))
    return Measurement(worst, 1e-12)


@check("scattering")
def excess_current_slope(ctx: VerifyContext) -> Measurement:
    lambdas = np.logspace(-4, -1, 7)
    gaps = []
    for lam in lambdas:
        exact, leading = scattering.excess_tunneling_current(0.5, UNIT.with_lambda(float(lam)))
        gaps.append(exact / leading - 1.0)
    slope = loglog_slope(lambdas, gaps)
    return Measurement(abs(slope - 2.0), 0.1, detail=f"slope={slope:.6f}")


@check("scattering")
def barrier_step_equation(ctx: VerifyContext) -> Measurement:
    p = UNIT.with_lambda(0.3)
    return Measurement(scattering.barrier_step_residual(0.7, p), 1e-10)


# --- stark ------------------------------------------------------------------

@check("stark")
def stark_diagonal_vanishes(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for n in range(1, 5):
        matrix = stark.stark_matrix(n, UNIT.with_lambda(0.5), stark.QUADRATURE, tol=ctx.quad_tol)
        worst = max(worst, max(abs(matrix[0, 0]), abs(matrix[1, 1])) / abs(matrix[0, 1]))
    return Measurement(worst, 1e-10)


@check("stark")
def stark_matrix_symmetric(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for n in range(1, 5):
        matrix = stark.stark_matrix(n, UNIT, stark.QUADRATURE, tol=ctx.quad_tol)
        worst = max(worst, abs(matrix[0, 1] - matrix[1, 0]) / abs(matrix[0, 1]))
    return Measurement(worst, 1e-12)


@check("stark")
def stark_closed_form_vs_quadrature(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for n in range(1, 7):
        closed = stark.stark_matrix_element(n, UNIT, stark.CLOSED_FORM)
        numeric = stark.stark_matrix_element(n, UNIT, stark.QUADRATURE, tol=ctx.quad_tol)
        worst = max(worst, abs(closed - numeric) / abs(closed))
    return Measurement(worst, 1e-9)


@check("stark")
def stark_n5_scaling(ctx: VerifyContext) -> Measurement:
    base = stark.stark_matrix_element(1, UNIT, stark.QUADRATURE, tol=ctx.quad_tol)
    worst = 0.0
    for n in range(2, 7):
        ratio = stark.stark_matrix_element(n, UNIT, stark.QUADRATURE, tol=ctx.quad_tol) / base
        worst = max(worst, abs(ratio / n ** 5 - 1.0))
    closed = max(
        abs(stark.closed_form_h12(n, UNIT) / stark.closed_form_h12(1, UNIT) - n ** 5) / n ** 5 for n in range(2, 7)
    )
    return Measurement(max(worst, closed), 1e-8)


@check("stark")
def stark_lambda_invariance(ctx: VerifyContext) -> Measurement:
    values = [
        stark.stark_matrix_element(2, UNIT.with_lambda(lam), stark.QUADRATURE, tol=ctx.quad_tol)
        for lam in (0.0, 0.5, 2.0)
    ]
    spread = (max(values) - min(values)) / abs(values[0])
    return Measurement(spread, 1e-10)


@check("stark")
def stark_second_equals_first(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for n in range(1, 4):
        first, _ = stark.stark_first_order(n, UNIT, stark.CLOSED_FORM)
        plus, minus = stark.stark_second_order(n, UNIT, stark.QUADRATURE, tol=ctx.quad_tol)
        worst = max(worst, abs(plus - first) / abs(first), abs(minus + first) / abs(first))
    return Measurement(worst, 1e-9)


@check("stark")
def stark_total_coefficient(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for n in range(1, 5):
        plus, minus = stark.stark_total_energies(n, UNIT)
        expected = 3.0 * UNIT.e_field * UNIT.hbar ** 8 * n ** 5 / (2.0 * UNIT.kappa ** 4 * UNIT.mass ** 4)
        worst = max(worst, abs((plus - minus) / 2.0 - expected) / expected)
    return Measurement(worst, 1e-14)


# --- oracle -----------------------------------------------------------------

@check("oracle")
def grid_hermiticity(ctx: VerifyContext) -> Measurement:
    p = UNIT.with_lambda(0.7)
    hamiltonian = build_hamiltonian(potentials.linear(p.slope), p, linear_grid(2000))
    scale = max(np.max(np.abs(hamiltonian.diagonal)), np.max(np.abs(hamiltonian.upper)))
    return Measurement(hamiltonian.hermiticity_residual() / scale, 1e-14)


@check("oracle")
def grid_box_spectrum(ctx: VerifyContext) -> Measurement:
    width = 1.0
    energies = grid_energies(potentials.free(), UNIT, Grid(0.0, width, 2000), 1)
    exact = UNIT.hbar ** 2 * math.pi ** 2 / (2.0 * UNIT.mass * width ** 2)
    return Measurement(abs(energies[0] - exact) / exact, 1e-3)


@check("oracle")
def grid_harmonic_calibration(ctx: VerifyContext) -> Measurement:
    raw = harmonic_report(UNIT, richardson=False)
    deformed = harmonic_report(UNIT.with_lambda(1.0), richardson=True)
    return Measurement(max(raw.max_abs_error, deformed.max_abs_error), 1e-5)


def _gauge_gap(sampler, grid: Grid, levels: int, lam: float) -> float:
    p = UNIT.with_lambda(lam)
    base = richardson_spectrum(sampler, UNIT, grid, levels)
    shifted = richardson_spectrum(sampler, p, grid, levels)
    return float(np.max(np.abs(shifted - base - p.gauge_shift)))


@check("oracle")
def grid_gauge_shift(ctx: VerifyContext) -> Measurement:
    worst = max(
        _gauge_gap(potentials.linear(UNIT.slope), linear_grid(), 5, 0.5),
        _gauge_gap(potentials.spike(UNIT.strength), delta_grid(), 1, 0.5),
        _gauge_gap(potentials.harmonic(UNIT.mass, 1.0), Grid(-12.0, 12.0, 3000), 3, 0.5),
    )
    return Measurement(worst, 1e-5)


@check("oracle")
def grid_gauge_eigenvectors(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    p = UNIT.with_lambda(0.3)
    for sampler, grid, levels in (
        (potentials.linear(UNIT.slope), linear_grid(), 3),
        (potentials.harmonic(UNIT.mass, 1.0), Grid(-12.0, 12.0, 3000), 3),
        (potentials.spike(UNIT.strength), delta_grid(), 1),
    ):
        base = eigen_lowest(build_hamiltonian(sampler, UNIT, grid), levels)
        shifted = eigen_lowest(build_hamiltonian(sampler, p, grid), levels)
        for (_, psi0), (_, psi) in zip(base, shifted):
            worst = max(worst, float(np.max(np.abs(np.abs(psi) - np.abs(psi0)))))
    return Measurement(worst, 1e-5)


@check("oracle")
def grid_linear_vs_analytic(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for lam in (0.0, 0.5, 1.0):
        worst = max(worst, linear_report(UNIT.with_lambda(lam), 1, 5).max_abs_error)
    return Measurement(worst, 1e-4)


@check("oracle")
def grid_convergence_order(ctx: VerifyContext) -> Measurement:
    exact = analytic.linear_energy(1, UNIT)
    spacings, errors = [], []
    for points in (751, 1501, 3001):
        grid = linear_grid(points)
        spacings.append(grid.spacing)
        errors.append(abs(grid_energies(potentials.linear(UNIT.slope), UNIT, grid, 1)[0] - exact))
    order = convergence_order(spacings, errors)
    return Measurement(abs(order - 2.0), 0.2, detail=f"order={order:.4f}")


@check("oracle")
def grid_delta_spike(ctx: VerifyContext) -> Measurement:
    report = delta_well_report(UNIT.with_lambda(0.5), delta_grid(4000))
    return Measurement(report.rel_errors[0], 1e-3)


@check("oracle")
def grid_delta_spike_refinement(ctx: VerifyContext) -> Measurement:
    errors = [delta_well_report(UNIT, delta_grid(points)).abs_errors[0] for points in (1000, 2000, 4000)]
    errors = [float(e) for e in errors]
    return Measurement(_violations(errors, strictly_increasing=False), 0, detail=f"errors={errors}")


@check("oracle")
def transfer_vs_analytic(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for lam in (0.0, 0.5):
        p = UNIT.with_lambda(lam)
        t, _ = scattering_transfer(0.5, p, 1e-3)
        worst = max(worst, abs(t - scattering.transmission(0.5, p)))
    return Measurement(worst, 1e-3)


@check("oracle")
def transfer_unitarity(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for lam in (0.0, 0.5, -1.0):
        t, rc = scattering_transfer(0.5, UNIT.with_lambda(lam), 1e-3)
        worst = max(worst, abs(t + rc - 1.0))
    return Measurement(worst, 1e-6)


@check("oracle")
def transfer_refinement(ctx: VerifyContext) -> Measurement:
    exact = scattering.transmission(0.5, UNIT)
    errors = [abs(scattering_transfer(0.5, UNIT, w)[0] - exact) for w in (1e-1, 1e-2, 1e-3)]
    errors = [float(e) for e in errors]
    return Measurement(_violations(errors, strictly_increasing=False), 0, detail=f"errors={errors}")


@check("oracle")
def transfer_transparent_limit(ctx: VerifyContext) -> Measurement:
    t, _ = scattering_transfer(0.5, UNIT.with_updates(strength=1e-12), 1e-3)
    return Measurement(abs(t - 1.0), 1e-10)


@check("oracle")
def quadrature_gamma_integrals(ctx: VerifyContext) -> Measurement:
    worst = 0.0
    for k, rate in [(0, 1.0), (1, 1.0), (2, 0.5), (3, 2.0), (4, 1.5), (5, 3.0), (6, 1.0), (7, 2.5), (8, 4.0), (9, 1.2)]:
        value, _ = adaptive_quadrature(
            lambda x: x ** k * math.exp(-rate * x), 0.0, math.inf, tol=ctx.quad_tol, scale=(k + 1) / rate
        )
        exact = math.gamma(k + 1) / rate ** (k + 1)
        worst = max(worst, abs(value - exact) / exact)
    return Measurement(worst, 1e-10)


@check("oracle")
def coulomb_softening_trend_monotone(ctx: VerifyContext) -> Measurement:
    trend = coulomb_softening_trend(UNIT, n_max=3)
    distances = ", ".join(f"a={a:g}: {max(d):.3g}" for a, d in zip(trend.softenings, trend.distances))
    return Measurement(0 if trend.monotone else 1, 0, detail=distances)


@check("oracle")
def residual_plane_wave(ctx: VerifyContext) -> Measurement:
    p = UNIT.with_lambda(0.6)
    k = 1.3
    energy = p.hbar ** 2 * k ** 2 / (2.0 * p.mass) + p.lam * p.hbar * k / p.mass
    value = ode_residual(lambda x: cmath.exp(1j * k * x), energy, lambda x: 0.0, p, np.linspace(-3.0, 3.0, 13))
    return Measurement(value, 1e-9)


@check("oracle")
def residual_sensitivity(ctx: VerifyContext) -> Measurement:
    state = analytic.bound_state("linear", 1, UNIT)
    points = np.linspace(0.25, 6.0, 20)
    value = ode_residual(state, state.energy + 0.1, analytic.potential("linear", UNIT), UNIT, points)
    return Measurement(value, 1e-3, at_least=True)


# --- runner -----------------------------------------------------------------

def select_checks(pattern: Optional[str] = None) -> List[Check]:
    """Checks whose name or group contains ``pattern`` (case-insensitive)."""
    if not pattern:
        return list(CHECKS.values())
    needle = pattern.lower()
    return [c for c in CHECKS.values() if needle in c.name.lower() or needle in c.group.lower()]


def run_check(item: Check, ctx: VerifyContext) -> CheckResult:
    try:
        m = item.run(ctx)
    except GupError as exc:
        logger.warning("check %s raised %s", item.name, exc)
        return CheckResult(item.name, item.group, False, math.nan, math.nan, f"{type(exc).__name__}: {exc}")
    value = float(m.value)
    ok = math.isfinite(value) and (value >= m.tolerance if m.at_least else value <= m.tolerance)
    return CheckResult(item.name, item.group, ok, value, float(m.tolerance), m.detail)


def run_checks(
    pattern: Optional[str] = None,
    ctx: Optional[VerifyContext] = None,
    progress: Optional[Callable[[Check], None]] = None,
) -> List[CheckResult]:
    ctx = ctx or VerifyContext()
    results = []
    for item in select_checks(pattern):
        if progress:
            progress(item)
        results.append(run_check(item, ctx))
    return results
