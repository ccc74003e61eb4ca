from cavity_memory.api.entities import DEFAULT_N_STEPS
from .analytic import make_sin2, make_twin_peak
from .base import BaseWaveform, ShapeKind, ShapeSpec
from .tabulated import from_samples


def make_shape(
        spec: ShapeSpec, n_steps: int = DEFAULT_N_STEPS,
) -> BaseWaveform:
    if spec.kind is ShapeKind.SIN2:
        return make_sin2(spec.tau_photon, n_steps=n_steps)
    elif spec.kind is ShapeKind.TWIN_PEAK:
        return make_twin_peak(spec.tau_photon, n_steps=n_steps)
    else:
        return from_samples(spec, n_steps=n_steps)
