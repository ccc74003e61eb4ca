import numpy as np
import pytest

from cavity_memory.api.entities import CavityParams, TimeGrid
from cavity_memory.api.entities.units import mhz_to_rad
from cavity_memory.api.exceptions import (
    DivergentPulse, InfeasibleCoupling, PulseLimitExceeded, SynthesisError,
    ZeroRho0,
)
from cavity_memory.synthesis import (
    chain_residual,
    check_feasible,
    pulse_from_intermediates,
    synthesis_intermediates,
    synthesize_control,
    SynthesisIntermediates,
)


def test_pulse_on_support(matched_pulse, sin2) -> None:
    assert matched_pulse.grid == sin2.support
    assert len(matched_pulse.omega) == sin2.support.n_steps + 1
    assert np.all(np.isfinite(matched_pulse.omega))
    assert matched_pulse.peak() > 0


def test_pulse_satisfies_chain(fast_sin2, params) -> None:
    chain = synthesis_intermediates(fast_sin2, params, fast_sin2.support)
    pulse = pulse_from_intermediates(chain)
    assert chain_residual(chain, pulse, fast_sin2, params) < 1e-12


def test_twin_peak_pulse_starts_at_zero(twin_peak, params) -> None:
    pulse = synthesize_control(twin_peak, params)
    assert pulse.omega[0] == 0
    assert np.all(np.isfinite(pulse.omega))


def test_larger_rho0_weaker_pulse(fast_sin2, params) -> None:
    weak = synthesize_control(fast_sin2, params.with_rho0(0.05))
    strong = synthesize_control(fast_sin2, params.with_rho0(0.001))
    assert weak.peak() < strong.peak()


def test_zero_rho0(fast_sin2, params) -> None:
    with pytest.raises(ZeroRho0):
        synthesize_control(fast_sin2, params.with_rho0(0))


def test_cooperativity_one_half(fast_sin2) -> None:
    p = CavityParams.from_mhz(3, 3, 3)
    with pytest.raises(InfeasibleCoupling, match="cooperativity") as info:
        synthesize_control(fast_sin2, p)
    assert info.value.cooperativity == pytest.approx(0.5)
    assert isinstance(info.value, SynthesisError)


def test_zero_rho0_checked_first() -> None:
    with pytest.raises(ZeroRho0):
        check_feasible(CavityParams.from_mhz(1, 3, 3, rho0=0))


def test_pulse_limit(fast_sin2, params, fast_pulse) -> None:
    limit = fast_pulse.peak() / 2
    with pytest.raises(PulseLimitExceeded) as info:
        synthesize_control(fast_sin2, params, omega_max=limit)
    assert info.value.limit == limit
    assert info.value.peak == pytest.approx(fast_pulse.peak())
    capped = synthesize_control(
        fast_sin2, params, omega_max=fast_pulse.peak() * 1.01,
    )
    np.testing.assert_array_equal(capped.omega, fast_pulse.omega)


def test_divergent_pulse() -> None:
    grid = TimeGrid(0.0, 1.0, 4)
    chain = SynthesisIntermediates(
        grid=grid,
        cg=np.zeros(5),
        cx_im=np.zeros(5),
        zeta=[0.0, 1.0, 1.0, 0.0, 0.0],
        rho_ee=[0.01, 0.01, 0.0, 0.0, 0.01],
    )
    with pytest.raises(DivergentPulse) as info:
        pulse_from_intermediates(chain)
    assert info.value.time == 0.5
    assert info.value.rho_ee == 0


def test_vanishing_population_without_drive() -> None:
    grid = TimeGrid(0.0, 1.0, 4)
    chain = SynthesisIntermediates(
        grid=grid,
        cg=np.zeros(5),
        cx_im=np.zeros(5),
        zeta=[0.0, 1.0, 0.0, 0.0, 0.0],
        rho_ee=[0.01, 0.04, 0.0, 0.0, 0.01],
    )
    pulse = pulse_from_intermediates(chain)
    np.testing.assert_allclose(pulse.omega, [0, 5, 0, 0, 0])


def test_pulse_in_mhz_range(matched_pulse) -> None:
    assert mhz_to_rad(1) < matched_pulse.peak() < mhz_to_rad(1e4)
