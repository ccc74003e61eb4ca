import math

import pytest

from cavity_memory.api.entities import InitialState
from cavity_memory.dynamics import excitation_ledger, simulate


def test_matched_ledger(sin2, matched_pulse, params) -> None:
    init = InitialState.seeded(params.rho0)
    traj = simulate(sin2, matched_pulse, params, init)
    report = excitation_ledger(traj, sin2, params, init)
    c = params.cooperativity()
    d1_norm2 = 4 * math.pi ** 2 / (3 * sin2.duration ** 2)
    expected = 1 - (1 + d1_norm2 / params.kappa ** 2) / (2 * c)
    assert report.storage_efficiency == pytest.approx(expected, abs=1e-4)
    assert report.storage_efficiency == pytest.approx(0.95985, abs=1e-4)
    assert report.spont_loss == pytest.approx(1 - expected, abs=1e-4)
    assert report.conservation_residual < 1e-6
    assert report.reflection < 1e-8


def test_ground_ledger(sin2, matched_pulse, params) -> None:
    init = InitialState.ground()
    traj = simulate(sin2, matched_pulse, params, init)
    report = excitation_ledger(traj, sin2, params, init)
    assert report.conservation_residual < 1e-6
    assert 0 < report.reflection < 0.01
    assert report.storage_efficiency < 0.97
