import math

import pytest

from cavity_memory.api.entities import (
    CavityParams, cooperativity, default_params, g_for_cooperativity,
    optimal_efficiency,
)
from cavity_memory.api.entities.units import MHZ, mhz_to_rad, rad_to_mhz
from cavity_memory.api.exceptions import InvalidParamsError


def test_default_cooperativity() -> None:
    p = default_params()
    assert p.cooperativity() == pytest.approx(12.5, rel=1e-12)
    assert cooperativity(p) == p.cooperativity()
    assert p.rho0 == 0.005


def test_mhz_convention() -> None:
    p = CavityParams.from_mhz(15, 3, 3)
    assert p.g == pytest.approx(2 * math.pi * 15e6)
    assert mhz_to_rad(1) == MHZ
    assert rad_to_mhz(p.kappa) == pytest.approx(3)
    assert p.to_mhz() == pytest.approx((15, 3, 3))


@pytest.mark.parametrize("field", ["g", "kappa", "gamma"])
@pytest.mark.parametrize("value", [0.0, -1.0, math.inf, math.nan])
def test_rates_must_be_positive(field, value) -> None:
    kwargs = {"g": 1.0, "kappa": 1.0, "gamma": 1.0, field: value}
    with pytest.raises(InvalidParamsError, match=field):
        CavityParams(**kwargs)


@pytest.mark.parametrize("rho0", [-0.1, 1.0, 2.0])
def test_rho0_range(rho0) -> None:
    with pytest.raises(InvalidParamsError, match="rho0"):
        default_params(rho0)


def test_rho0_zero_is_valid_params() -> None:
    assert default_params(0.0).rho0 == 0


def test_with_rho0_keeps_rates() -> None:
    p = default_params()
    q = p.with_rho0(0.01)
    assert (q.g, q.kappa, q.gamma) == (p.g, p.kappa, p.gamma)
    assert q.rho0 == 0.01
    assert p.with_g(p.kappa).cooperativity() == pytest.approx(0.5)


def test_g_for_cooperativity() -> None:
    p = default_params()
    g = g_for_cooperativity(12.5, p.kappa, p.gamma)
    assert g == pytest.approx(p.g, rel=1e-12)
    with pytest.raises(InvalidParamsError):
        g_for_cooperativity(0, p.kappa, p.gamma)


def test_optimal_efficiency() -> None:
    assert optimal_efficiency(12.5) == pytest.approx(25 / 26)
    assert optimal_efficiency(0.5) == pytest.approx(0.5)
    with pytest.raises(InvalidParamsError):
        optimal_efficiency(-1)
