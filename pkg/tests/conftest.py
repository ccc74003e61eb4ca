import pytest

from cavity_memory.api.entities import CavityParams, default_params
from cavity_memory.experiments import DEFAULT_TAU
from cavity_memory.shapes import make_sin2, make_twin_peak
from cavity_memory.synthesis import synthesize_control

# coarse grids for tests that do not check absorption thresholds
FAST_STEPS = 2 ** 10


@pytest.fixture(scope="session")
def params() -> CavityParams:
    return default_params()


@pytest.fixture(scope="session")
def tau() -> float:
    return DEFAULT_TAU


@pytest.fixture(scope="session")
def sin2(tau):
    return make_sin2(tau)


@pytest.fixture(scope="session")
def twin_peak(tau):
    return make_twin_peak(tau)


@pytest.fixture(scope="session")
def fast_sin2(tau):
    return make_sin2(tau, n_steps=FAST_STEPS)


@pytest.fixture(scope="session")
def matched_pulse(sin2, params):
    return synthesize_control(sin2, params)


@pytest.fixture(scope="session")
def fast_pulse(fast_sin2, params):
    return synthesize_control(fast_sin2, params)
