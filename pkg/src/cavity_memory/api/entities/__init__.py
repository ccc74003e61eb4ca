__all__ = [
    "AbsorptionReport",
    "CavityParams",
    "ControlPulse",
    "DEFAULT_N_STEPS",
    "DEFAULT_PARAMS_MHZ",
    "DEFAULT_RHO0",
    "InitialState",
    "StateTrajectory",
    "TimeGrid",
    "cooperativity",
    "default_params",
    "g_for_cooperativity",
    "optimal_efficiency",
]

from .grid import DEFAULT_N_STEPS, TimeGrid
from .params import (
    CavityParams,
    cooperativity,
    DEFAULT_PARAMS_MHZ,
    DEFAULT_RHO0,
    default_params,
    g_for_cooperativity,
    optimal_efficiency,
)
from .pulse import ControlPulse
from .trajectory import AbsorptionReport, InitialState, StateTrajectory
