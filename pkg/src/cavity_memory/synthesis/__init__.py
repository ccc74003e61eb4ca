__all__ = [
    "EPS_DIV",
    "PulseCache",
    "SynthesisIntermediates",
    "amplitude_cg",
    "amplitude_cx",
    "chain_residual",
    "check_feasible",
    "coupling_product_zeta",
    "default_cache",
    "population_ee",
    "pulse_from_intermediates",
    "synthesis_intermediates",
    "synthesize_cached",
    "synthesize_control",
]

from .cache import default_cache, PulseCache, synthesize_cached
from .chain import (
    amplitude_cg,
    amplitude_cx,
    coupling_product_zeta,
    population_ee,
    synthesis_intermediates,
    SynthesisIntermediates,
)
from .pulse import (
    chain_residual,
    check_feasible,
    EPS_DIV,
    pulse_from_intermediates,
    synthesize_control,
)
