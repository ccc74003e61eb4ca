import math

import numpy as np
import pytest

from cavity_memory.api.entities import g_for_cooperativity
from cavity_memory.api.entities.units import us_to_s
from cavity_memory.api.exceptions import (
    InfeasibleCoupling, OutsideSupportError,
)
from cavity_memory.shapes import make_sin2
from cavity_memory.synthesis import (
    amplitude_cg,
    amplitude_cx,
    coupling_product_zeta,
    population_ee,
    synthesis_intermediates,
)


def test_cavity_amplitude(sin2, params, tau) -> None:
    t = np.linspace(0, tau, 11)
    np.testing.assert_allclose(
        amplitude_cg(sin2, params, t),
        sin2.value(t) / math.sqrt(2 * params.kappa),
    )


def test_excited_amplitude(sin2, params, tau) -> None:
    t = tau / 3
    expected = (sin2.d1(t) - params.kappa * sin2.value(t)) / (
        params.g * math.sqrt(2 * params.kappa)
    )
    assert amplitude_cx(sin2, params, t) == pytest.approx(expected)


def test_outside_support(sin2, params, tau) -> None:
    with pytest.raises(OutsideSupportError):
        amplitude_cg(sin2, params, tau * 1.01)
    with pytest.raises(OutsideSupportError):
        coupling_product_zeta(sin2, params, np.array([-1e-9, 0.0]))


def test_zeta_at_start(sin2, twin_peak, params) -> None:
    zeta_sin2 = coupling_product_zeta(sin2, params, 0.0)
    expected = -2 * sin2.d2(0.0) / (params.g * math.sqrt(2 * params.kappa))
    assert zeta_sin2 == pytest.approx(expected)
    assert zeta_sin2 < 0
    assert coupling_product_zeta(twin_peak, params, 0.0) == 0


def test_population_starts_at_rho0(fast_sin2, params) -> None:
    rho_ee = population_ee(fast_sin2, params, fast_sin2.support)
    assert rho_ee[0] == params.rho0
    assert np.all(rho_ee > 0)


def test_population_balance(sin2, params) -> None:
    # the photon ends in |e,0> apart from the spontaneous loss
    chain = synthesis_intermediates(sin2, params, sin2.support)
    c = params.cooperativity()
    d1_norm2 = 4 * math.pi ** 2 / (3 * sin2.duration ** 2)
    spont = (1 + d1_norm2 / params.kappa ** 2) / (2 * c)
    assert chain.rho_ee[-1] - params.rho0 == pytest.approx(1 - spont, abs=1e-6)
    assert chain.cg[-1] == pytest.approx(0, abs=1e-12)
    assert chain.cx_im[-1] == pytest.approx(0, abs=1e-9)


def test_short_photon_infeasible(params) -> None:
    w = make_sin2(us_to_s(0.05), n_steps=2 ** 12)
    g = g_for_cooperativity(1.0, params.kappa, params.gamma)
    p = params.with_g(g)
    with pytest.raises(InfeasibleCoupling) as info:
        population_ee(w, p, w.support)
    assert info.value.cooperativity == pytest.approx(1.0)
    assert info.value.rho_ee < 0
    assert 0 < info.value.time < w.duration


def test_intermediates_read_only(fast_sin2, params) -> None:
    chain = synthesis_intermediates(fast_sin2, params, fast_sin2.support)
    assert chain.zeta.shape == (len(fast_sin2.support),)
    with pytest.raises(ValueError):
        chain.rho_ee[0] = 1
