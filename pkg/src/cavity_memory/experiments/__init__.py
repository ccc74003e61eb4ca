__all__ = [
    "AbsorptionCase",
    "AbsorptionCases",
    "CaseResult",
    "CooperativityPoint",
    "DEFAULT_GAP",
    "DEFAULT_TAU",
    "Rho0Point",
    "absorb_bin",
    "make_timebin_qubit",
    "run_absorption_cases",
    "stored_amplitude",
    "sweep_cooperativity",
    "sweep_rho0",
    "timebin_map",
]

from .cases import (
    AbsorptionCase,
    AbsorptionCases,
    CaseResult,
    run_absorption_cases,
)
from .sweeps import (
    CooperativityPoint,
    Rho0Point,
    sweep_cooperativity,
    sweep_rho0,
)
from .timebin import (
    absorb_bin,
    DEFAULT_GAP,
    DEFAULT_TAU,
    make_timebin_qubit,
    stored_amplitude,
    timebin_map,
)
