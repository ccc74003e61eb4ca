__all__ = [
    "BaseWaveform",
    "ShapeKind",
    "ShapeSpec",
    "Sin2Waveform",
    "SplineWaveform",
    "TwinPeakWaveform",
    "from_samples",
    "load_samples",
    "make_shape",
    "make_sin2",
    "make_twin_peak",
]

from .analytic import (
    make_sin2,
    make_twin_peak,
    Sin2Waveform,
    TwinPeakWaveform,
)
from .base import BaseWaveform, ShapeKind, ShapeSpec
from .factory import make_shape
from .tabulated import from_samples, load_samples, SplineWaveform
