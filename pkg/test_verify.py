"""The analytic-vs-oracle check registry."""
import math

import pytest

from gup_systems import verify
from gup_systems.errors import ConvergenceError
from gup_systems.verify import CHECKS, Check, Measurement, VerifyContext, run_check, select_checks

GROUPS = {"specfun", "analytic", "scattering", "stark", "oracle"}


@pytest.mark.parametrize("name", sorted(CHECKS))
def test_check_passes(name):
    result = run_check(CHECKS[name], VerifyContext())
    assert result.passed, f"{name}: {result.value} vs {result.tolerance} {result.detail}"


def test_every_check_has_a_known_group():
    assert {c.group for c in CHECKS.values()} == GROUPS


def test_select_by_name_or_group():
    assert [c.name for c in select_checks("WRONSKIAN")] == ["airy_wronskian"]
    stark_checks = select_checks("stark")
    assert stark_checks and all(c.group == "stark" for c in stark_checks)
    assert len(select_checks(None)) == len(CHECKS)
    assert select_checks("no-such-check") == []


def test_failing_measurement_reported():
    item = Check("too_big", "oracle", lambda ctx: Measurement(1e-3, 1e-6, detail="synthetic"))
    result = run_check(item, VerifyContext())
    assert not result.passed
    assert result.to_dict()["detail"] == "synthetic"


def test_lower_bound_measurement():
    item = Check("sensitive", "oracle", lambda ctx: Measurement(0.5, 1e-3, at_least=True))
    assert run_check(item, VerifyContext()).passed


def test_errors_become_failures():
    def boom(ctx):
        raise ConvergenceError("no convergence")

    result = run_check(Check("boom", "oracle", boom), VerifyContext())
    assert not result.passed
    assert math.isnan(result.value)
    assert "ConvergenceError" in result.detail


def test_progress_called_per_check():
    seen = []
    results = verify.run_checks("lanczos", progress=seen.append)
    assert [c.name for c in seen] == [r.name for r in results] == ["lanczos_gamma"]


def test_gauge_eigenvector_check_covers_delta_spike(monkeypatch):
    built = []
    real_build = verify.build_hamiltonian

    def recording(sampler, p, grid):
        built.append(grid)
        return real_build(sampler, p, grid)

    monkeypatch.setattr(verify, "build_hamiltonian", recording)
    assert run_check(CHECKS["grid_gauge_eigenvectors"], VerifyContext()).passed
    assert verify.delta_grid() in built


def test_refinement_detail_has_plain_floats():
    result = run_check(CHECKS["transfer_refinement"], VerifyContext())
    assert "np.float64" not in result.detail
    assert result.detail.startswith("errors=[")
