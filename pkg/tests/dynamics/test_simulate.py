import math

import numpy as np
import pytest
from scipy.integrate import cumulative_trapezoid, trapezoid

from cavity_memory.api.entities import ControlPulse, InitialState
from cavity_memory.api.entities.units import s_to_us
from cavity_memory.api.exceptions import GridMismatchError
from cavity_memory.dynamics import (
    default_grid,
    empty_cavity_response,
    empty_cavity_trajectory,
    excitation_ledger,
    reflection_probability,
    RINGDOWN_DECAYS,
    ringdown_grid,
    simulate,
)
from cavity_memory.synthesis import (
    synthesis_intermediates, synthesize_control,
)


def test_matched_absorption(sin2, matched_pulse, params) -> None:
    init = InitialState.seeded(params.rho0)
    traj = simulate(sin2, matched_pulse, params, init)
    assert reflection_probability(traj) < 1e-8
    assert traj.rho_ee[0] == pytest.approx(params.rho0)


def test_follows_synthesis_chain(sin2, matched_pulse, params) -> None:
    chain = synthesis_intermediates(sin2, params, sin2.support)
    traj = simulate(
        sin2, matched_pulse, params, InitialState.seeded(params.rho0),
    )
    np.testing.assert_allclose(traj.c_g, chain.cg, atol=1e-6 * chain.cg.max())
    np.testing.assert_allclose(traj.rho_ee, chain.rho_ee, atol=1e-6)


def test_linear_in_photon_amplitude(fast_sin2, fast_pulse, params) -> None:
    init = InitialState.ground()
    full = simulate(fast_sin2, fast_pulse, params, init)
    half = simulate(fast_sin2.scaled(0.5), fast_pulse, params, init)
    np.testing.assert_allclose(half.c_e, 0.5 * full.c_e, rtol=1e-12)
    np.testing.assert_allclose(half.c_g, 0.5 * full.c_g, rtol=1e-12)
    np.testing.assert_allclose(half.phi_out, 0.5 * full.phi_out, rtol=1e-12)


def test_cavity_decay_without_photon(sin2, params) -> None:
    silent = sin2.scaled(0.0)
    init = InitialState(cg0=1.0)
    traj = simulate(silent, ControlPulse.zeros(sin2.support), params, init)
    norm = traj.norm2()
    assert norm[0] == 1
    assert np.all(np.diff(norm) <= 0)
    assert np.all(traj.c_e == 0)
    assert norm[-1] < 1e-6
    report = excitation_ledger(traj, silent, params, init)
    # the loss rate starts with a finite slope, trapezoid error ~ (κ·dt)²
    assert report.conservation_residual < 1e-4
    assert report.storage_efficiency == 0


def test_excited_state_stays_without_drive(fast_sin2, params) -> None:
    silent = fast_sin2.scaled(0.0)
    traj = simulate(
        silent, ControlPulse.zeros(fast_sin2.support), params,
        InitialState(ce0=1.0),
    )
    np.testing.assert_array_equal(traj.rho_ee, 1.0)
    assert reflection_probability(traj) == 0


def test_grid_mismatch(fast_sin2, fast_pulse, params) -> None:
    with pytest.raises(GridMismatchError):
        simulate(
            fast_sin2, fast_pulse, params, InitialState.ground(),
            grid=fast_sin2.support.with_steps(512),
        )


def test_empty_cavity_reflects_everything(sin2, params) -> None:
    traj = empty_cavity_trajectory(sin2, params.kappa)
    tail = RINGDOWN_DECAYS / params.kappa
    assert traj.grid.t_stop >= (sin2.duration + tail) * (1 - 1e-12)
    assert traj.grid.dt == pytest.approx(sin2.support.dt)
    assert reflection_probability(traj) == pytest.approx(1.0, abs=1e-6)
    np.testing.assert_allclose(
        traj.phi_out,
        math.sqrt(2 * params.kappa) * traj.c_g - traj.phi_in,
    )


def test_empty_cavity_holds_photon_at_end_of_support(sin2, params) -> None:
    c_cav, phi_out = empty_cavity_response(sin2, params.kappa, sin2.support)
    assert c_cav[-1] ** 2 > 1e-7
    t = sin2.support.times()
    reflected = trapezoid(phi_out ** 2, t)
    assert 0.99 < reflected < 1 - 1e-7


def test_empty_cavity_output_changes_sign(sin2, params) -> None:
    grid = ringdown_grid(sin2, params.kappa)
    _, phi_out = empty_cavity_response(sin2, params.kappa, grid)
    t_us = s_to_us(grid.times())
    assert np.all(phi_out[1:20] < 0)
    first_positive = np.flatnonzero(phi_out[1:] > 0)[0] + 1
    assert 0.12 < t_us[first_positive] < 0.15


def test_default_grid(sin2) -> None:
    grid = default_grid(sin2, 256)
    assert grid.t_start == 0
    assert grid.t_stop == sin2.duration
    assert grid.n_steps == 256


def test_step_halving_keeps_reflection(sin2, matched_pulse, params) -> None:
    init = InitialState.seeded(params.rho0)
    coarse = reflection_probability(
        simulate(sin2, matched_pulse, params, init),
    )
    fine_photon = sin2.with_steps(2 * sin2.n_steps)
    fine_pulse = synthesize_control(fine_photon, params)
    fine = reflection_probability(
        simulate(fine_photon, fine_pulse, params, init),
    )
    assert abs(fine - coarse) < 1e-8


@pytest.mark.parametrize("seeded", [True, False])
def test_population_bounded_by_input(
        fast_sin2, fast_pulse, params, seeded,
) -> None:
    if seeded:
        init = InitialState.seeded(params.rho0)
    else:
        init = InitialState.ground()
    traj = simulate(fast_sin2, fast_pulse, params, init)
    t = traj.grid.times()
    arrived = cumulative_trapezoid(traj.phi_in ** 2, t, initial=0)
    total = traj.rho_ee + traj.rho_gg + traj.rho_xx
    assert np.all(total <= init.norm2() + arrived + 1e-9)
