"""Numerical oracles: quadrature, grid spectra, transfer scattering, residuals."""
import cmath
import math

import numpy as np
import pytest

from gup_systems import analytic, scattering
from gup_systems.errors import ParameterError, QuadratureError
from gup_systems.oracle import potentials
from gup_systems.oracle.convergence import convergence_order, loglog_slope
from gup_systems.oracle.grid import (
    Grid,
    build_hamiltonian,
    eigen_lowest,
    grid_energies,
    richardson_spectrum,
    sample_potential,
)
from gup_systems.oracle.quadrature import adaptive_quadrature, adaptive_quadrature_complex
from gup_systems.oracle.residual import ode_residual, richardson_derivatives
from gup_systems.oracle.spectra import (
    coulomb_grid,
    coulomb_softening_trend,
    delta_grid,
    delta_well_report,
    harmonic_report,
    linear_report,
)
from gup_systems.oracle.transfer import free_wavenumbers, scattering_transfer, transfer_amplitudes
from gup_systems.params import PhysicalParams

UNIT = PhysicalParams()


# --- quadrature -------------------------------------------------------------

@pytest.mark.parametrize("k, rate", [(0, 1.0), (3, 2.0), (6, 1.0), (9, 0.5)])
def test_gamma_integrals(k, rate):
    value, _ = adaptive_quadrature(lambda x: x ** k * math.exp(-rate * x), 0.0, math.inf, scale=(k + 1) / rate)
    assert value == pytest.approx(math.gamma(k + 1) / rate ** (k + 1), rel=1e-10)


def test_finite_interval():
    value, error = adaptive_quadrature(lambda x: x * x, 0.0, 1.0)
    assert value == pytest.approx(1.0 / 3.0, rel=1e-14)
    assert error < 1e-12


def test_complex_integrand():
    value, _ = adaptive_quadrature_complex(lambda x: cmath.exp(1j * x), 0.0, 1.0)
    assert value == pytest.approx(complex(math.sin(1.0), 1.0 - math.cos(1.0)), rel=1e-12)


def test_divergent_integral_raises():
    with pytest.raises(QuadratureError):
        adaptive_quadrature(lambda x: 1.0 / x, 0.0, 1.0, limit=20)


def test_quadrature_argument_checks():
    with pytest.raises(ParameterError):
        adaptive_quadrature(lambda x: x, 0.0, 1.0, tol=0.0)
    with pytest.raises(ParameterError):
        adaptive_quadrature(lambda x: x, -math.inf, 1.0)


# --- grid -------------------------------------------------------------------

def test_grid_geometry():
    grid = Grid(0.0, 1.0, 101)
    assert grid.spacing == pytest.approx(0.01)
    assert grid.points[0] == 0.0 and grid.points[-1] == 1.0
    assert grid.refined().n_points == 201
    assert grid.refined().spacing == pytest.approx(0.005)
    with pytest.raises(ParameterError):
        Grid(0.0, 1.0, 10)
    with pytest.raises(ParameterError):
        Grid(1.0, 0.0, 100)


def test_non_finite_potential_rejected():
    with np.errstate(divide="ignore"):
        with pytest.raises(ParameterError):
            sample_potential(lambda x: -1.0 / np.abs(x), Grid(-1.0, 1.0, 21))


def test_hamiltonian_is_hermitian():
    hamiltonian = build_hamiltonian(potentials.linear(1.0), UNIT.with_lambda(0.7), Grid(0.0, 10.0, 200))
    assert hamiltonian.dimension == 198
    assert hamiltonian.hermiticity_residual() == 0.0
    dense = hamiltonian.to_dense()
    assert np.allclose(dense, dense.conj().T)


def test_tridiagonal_and_dense_agree():
    hamiltonian = build_hamiltonian(potentials.harmonic(1.0, 1.0), UNIT.with_lambda(0.5), Grid(-8.0, 8.0, 300))
    fast = eigen_lowest(hamiltonian, 4)
    dense = eigen_lowest(hamiltonian, 4, method="dense")
    for (e1, psi1), (e2, psi2) in zip(fast, dense):
        assert e1 == pytest.approx(e2, rel=1e-10)
        assert np.allclose(np.abs(psi1), np.abs(psi2), atol=1e-8)
    h = hamiltonian.grid.spacing
    for _, psi in fast:
        assert np.sum(np.abs(psi) ** 2) * h == pytest.approx(1.0)
        assert psi[0] == 0 and psi[-1] == 0


def test_eigen_lowest_rejects_bad_requests():
    hamiltonian = build_hamiltonian(potentials.free(), UNIT, Grid(0.0, 1.0, 20))
    with pytest.raises(ParameterError):
        eigen_lowest(hamiltonian, 0)
    with pytest.raises(ParameterError):
        eigen_lowest(hamiltonian, 2, method="lanczos")


def test_box_spectrum():
    energies = grid_energies(potentials.free(), UNIT, Grid(0.0, 1.0, 2000), 3)
    exact = [math.pi ** 2 * k ** 2 / 2.0 for k in (1, 2, 3)]
    assert list(energies) == pytest.approx(exact, rel=1e-3)


def test_harmonic_calibration():
    assert harmonic_report(UNIT, richardson=False).max_abs_error < 1e-5
    assert harmonic_report(UNIT.with_lambda(1.0), levels=3, richardson=True).max_abs_error < 1e-5


def test_richardson_needs_callable():
    with pytest.raises(ParameterError):
        richardson_spectrum(np.zeros(100), UNIT, Grid(0.0, 1.0, 100), 1)


@pytest.mark.parametrize("lam", [0.0, 0.5, 1.0])
def test_linear_spectrum_matches_closed_form(lam):
    report = linear_report(UNIT.with_lambda(lam), 1, 5)
    assert report.max_abs_error < 1e-4
    assert [row["n"] for row in report.to_rows()] == [1, 2, 3, 4, 5]


def test_gauge_shift_on_grid():
    grid = Grid(-12.0, 12.0, 1500)
    sampler = potentials.harmonic(1.0, 1.0)
    p = UNIT.with_lambda(0.5)
    base = richardson_spectrum(sampler, UNIT, grid, 3)
    shifted = richardson_spectrum(sampler, p, grid, 3)
    assert list(shifted - base) == pytest.approx([p.gauge_shift] * 3, abs=1e-5)


def test_linear_convergence_order():
    exact = analytic.linear_energy(1, UNIT)
    spacings, errors = [], []
    for points in (751, 1501, 3001):
        grid = Grid(0.0, 30.0, points)
        spacings.append(grid.spacing)
        errors.append(abs(grid_energies(potentials.linear(1.0), UNIT, grid, 1)[0] - exact))
    assert convergence_order(spacings, errors) == pytest.approx(2.0, abs=0.2)


def test_loglog_slope():
    hs = [0.1, 0.05, 0.025]
    assert loglog_slope(hs, [3.0 * h ** 2 for h in hs]) == pytest.approx(2.0)
    with pytest.raises(ParameterError):
        loglog_slope([0.1], [0.2])
    with pytest.raises(ParameterError):
        loglog_slope([0.1, 0.2], [0.0, 1.0])


def test_spike_carries_delta_area():
    x = np.linspace(-1.0, 1.0, 201)
    values = potentials.spike(2.0)(x)
    assert np.count_nonzero(values) == 1
    assert values.sum() * (x[1] - x[0]) == pytest.approx(-2.0)


def test_delta_spike_spectrum():
    report = delta_well_report(UNIT.with_lambda(0.5), delta_grid(4000))
    assert report.rel_errors[0] < 1e-3
    coarse = delta_well_report(UNIT, delta_grid(1000)).abs_errors[0]
    fine = delta_well_report(UNIT, delta_grid(2000)).abs_errors[0]
    assert fine < coarse


def test_delta_spike_eigenvector_modulus_gauge_invariant():
    spike = potentials.spike(UNIT.strength)
    grid = delta_grid()
    (_, psi0), = eigen_lowest(build_hamiltonian(spike, UNIT, grid), 1)
    (_, psi), = eigen_lowest(build_hamiltonian(spike, UNIT.with_lambda(0.3), grid), 1)
    assert np.max(np.abs(np.abs(psi) - np.abs(psi0))) < 1e-5


def test_coulomb_half_line_grid_covers_both_branches():
    grid = coulomb_grid(3)
    assert (grid.x_min, grid.x_max) == (0.0, 180.0)
    p = UNIT.with_lambda(0.4)
    for n in (1, 2, 3):
        assert analytic.coulomb_wavefunction(n, analytic.CoulombBranch.A, 0.0, p) == 0
        assert analytic.coulomb_wavefunction(n, analytic.CoulombBranch.B, 0.0, p) == 0
        for x in (0.5, 3.0, 17.0):
            a = abs(analytic.coulomb_wavefunction(n, analytic.CoulombBranch.A, x, p))
            b = abs(analytic.coulomb_wavefunction(n, analytic.CoulombBranch.B, -x, p))
            assert a == pytest.approx(b, rel=1e-14)


def test_softening_trend_monotone():
    trend = coulomb_softening_trend(UNIT, n_max=2)
    assert trend.softenings == [1e-1, 1e-2, 1e-3]
    assert trend.monotone
    assert len(trend.to_rows()) == 6


# --- transfer ---------------------------------------------------------------

def test_free_wavenumbers_match_scattering():
    p = UNIT.with_lambda(0.6)
    assert free_wavenumbers(0.8, p) == pytest.approx(scattering.wavenumbers(0.8, p))


@pytest.mark.parametrize("lam", [0.0, 0.5, -1.0])
def test_transfer_matches_closed_form(lam):
    p = UNIT.with_lambda(lam)
    t, rc = scattering_transfer(0.5, p, 1e-3)
    assert t == pytest.approx(scattering.transmission(0.5, p), abs=1e-3)
    assert t + rc == pytest.approx(1.0, abs=1e-6)


def test_transfer_refines_with_width():
    exact = scattering.transmission(1.0, UNIT)
    errors = [abs(transfer_amplitudes(1.0, UNIT, w).T - exact) for w in (1e-1, 1e-2, 1e-3)]
    assert errors[0] > errors[1] > errors[2]


def test_transfer_argument_checks():
    with pytest.raises(ParameterError):
        scattering_transfer(0.5, UNIT, 0.0)
    with pytest.raises(ParameterError):
        scattering_transfer(-0.5, UNIT)


# --- residuals --------------------------------------------------------------

def test_richardson_derivatives_of_sine():
    first, second = richardson_derivatives(math.sin, 0.7, step=0.1)
    assert first == pytest.approx(math.cos(0.7), abs=1e-10)
    assert second == pytest.approx(-math.sin(0.7), abs=1e-9)


def test_plane_wave_residual():
    p = UNIT.with_lambda(0.6)
    k = 1.3
    energy = k * k / 2.0 + p.lam * k
    points = np.linspace(-3.0, 3.0, 13)
    assert ode_residual(lambda x: cmath.exp(1j * k * x), energy, lambda x: 0.0, p, points) < 1e-9


def test_residual_detects_wrong_energy():
    state = analytic.bound_state("linear", 1, UNIT)
    points = np.linspace(0.25, 6.0, 20)
    potential = analytic.potential("linear", UNIT)
    assert ode_residual(state, state.energy, potential, UNIT, points) < 1e-7
    assert ode_residual(state, state.energy + 0.1, potential, UNIT, points) > 1e-3
