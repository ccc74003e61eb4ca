__all__ = [
    "RINGDOWN_DECAYS",
    "default_grid",
    "empty_cavity_response",
    "empty_cavity_trajectory",
    "excitation_ledger",
    "reflection_probability",
    "ringdown_grid",
    "simulate",
]

from .ledger import excitation_ledger, reflection_probability
from .simulate import (
    default_grid,
    empty_cavity_response,
    empty_cavity_trajectory,
    RINGDOWN_DECAYS,
    ringdown_grid,
    simulate,
)
