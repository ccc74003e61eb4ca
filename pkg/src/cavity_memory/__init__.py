__all__ = [
    "AbsorptionCase",
    "CavityParams",
    "ControlPulse",
    "InitialState",
    "ShapeKind",
    "ShapeSpec",
    "StateTrajectory",
    "TimeGrid",
    "excitation_ledger",
    "make_shape",
    "run_absorption_cases",
    "simulate",
    "synthesize_control",
    "timebin_map",
]

import importlib.metadata as _metadata

from .api.entities import (
    CavityParams, ControlPulse, InitialState, StateTrajectory, TimeGrid,
)
from .dynamics import excitation_ledger, simulate
from .experiments import AbsorptionCase, run_absorption_cases, timebin_map
from .shapes import make_shape, ShapeKind, ShapeSpec
from .synthesis import synthesize_control

__version__ = _metadata.version("cavity-memory")
