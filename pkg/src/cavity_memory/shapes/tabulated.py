import hashlib
from logging import getLogger
from pathlib import Path
from typing import Hashable, Union

import numpy as np
from scipy.interpolate import CubicSpline

from cavity_memory.api.entities import DEFAULT_N_STEPS
from cavity_memory.api.entities.units import US
from cavity_memory.api.exceptions import ShapeError
from .base import BaseWaveform, ShapeKind, ShapeSpec

logger = getLogger(__name__)

# relative to the largest sample
_START_TOLERANCE = 1e-12


class SplineWaveform(BaseWaveform):
    """
    Tabulated waveform interpolated by a cubic spline.

    The spline is clamped to zero slope at the first sample, so the photon
    starts smoothly, and uses not-a-knot at the last one.
    Derivatives are those of the interpolant.
    """

    def __init__(
            self,
            times: np.ndarray,
            amplitudes: np.ndarray,
            n_steps: int = DEFAULT_N_STEPS,
    ):
        times = np.asarray(times, dtype=float)
        amplitudes = np.asarray(amplitudes, dtype=float)
        times = times - times[0]
        super().__init__(duration=times[-1], n_steps=n_steps)
        self.knots = times
        self.spline = CubicSpline(
            times, amplitudes, bc_type=((1, 0.0), "not-a-knot"),
        )
        self._d1_spline = self.spline.derivative(1)
        self._d2_spline = self.spline.derivative(2)
        digest = hashlib.sha256(times.tobytes() + amplitudes.tobytes())
        self._digest = digest.hexdigest()

    def _shape_key(self) -> Hashable:
        return self._digest

    def _panel_edges(self) -> np.ndarray:
        # spline squared is a polynomial of degree 6 on every knot interval
        return self.knots

    def _value(self, s: np.ndarray) -> np.ndarray:
        return self.spline(s)

    def _d1(self, s: np.ndarray) -> np.ndarray:
        return self._d1_spline(s)

    def _d2(self, s: np.ndarray) -> np.ndarray:
        return self._d2_spline(s)


def from_samples(
        spec: ShapeSpec, n_steps: int = DEFAULT_N_STEPS,
) -> SplineWaveform:
    if spec.kind is not ShapeKind.TABULATED:
        raise ShapeError(f"Expected tabulated shape, got `{spec.kind.value}`")
    samples = np.array(spec.samples, dtype=float)
    times, amplitudes = samples[:, 0], samples[:, 1]
    peak = np.max(np.abs(amplitudes))
    if peak == 0:
        raise ShapeError("All samples are zero, cannot normalize")
    if abs(amplitudes[0]) > _START_TOLERANCE * peak:
        raise ShapeError(
            f"Photon must start from zero amplitude, got {amplitudes[0]!r}",
        )
    if times[0] != 0:
        logger.debug("Shift tabulated photon by %s s", -times[0])
    raw = SplineWaveform(times, amplitudes, n_steps=n_steps)
    waveform = raw.normalized()
    logger.debug(
        "Tabulated photon: %s samples, duration %s s, scale %s",
        len(times), waveform.duration, waveform.scale,
    )
    return waveform


def load_samples(path: Union[str, Path]) -> ShapeSpec:
    """Read a two-column ``time_us amplitude`` file, ``#`` for comments."""
    try:
        data = np.loadtxt(path, comments="#", ndmin=2)
    except (OSError, ValueError) as e:
        raise ShapeError(f"Cannot read photon samples from {path}: {e}") from e
    if data.shape[1] != 2:
        raise ShapeError(
            f"Photon samples need 2 columns, got {data.shape[1]} in {path}",
        )
    return ShapeSpec(
        kind=ShapeKind.TABULATED,
        samples=[(t * US, a) for t, a in data],
    )
