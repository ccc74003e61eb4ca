import copy
import math
from abc import ABC, abstractmethod
from enum import Enum
from typing import Hashable, Optional, Sequence, Tuple

import numpy as np

from cavity_memory.api.entities import DEFAULT_N_STEPS, TimeGrid
from cavity_memory.api.exceptions import ShapeError
from cavity_memory.api.protocols import PhotonWaveform, Times

# Gauss-Legendre order used per panel for L2 norms
_QUAD_ORDER = 8
_DEFAULT_PANELS = 512


class ShapeKind(Enum):
    SIN2 = "sin2"
    TWIN_PEAK = "twin_peak"
    TABULATED = "tabulated"


class ShapeSpec:
    """
    Description of a photon shape.

    Analytic kinds need `tau_photon` (s), tabulated ones need `samples`
    as ``(t, amplitude)`` pairs with strictly increasing times.
    """

    MIN_SAMPLES = 8

    def __init__(
            self,
            kind: ShapeKind,
            tau_photon: Optional[float] = None,
            samples: Optional[Sequence[Tuple[float, float]]] = None,
    ):
        self.kind = ShapeKind(kind)
        self.tau_photon = tau_photon
        self.samples = None if samples is None else tuple(
            (float(t), float(a)) for t, a in samples
        )
        if self.kind is ShapeKind.TABULATED:
            self._check_samples()
        elif tau_photon is None or not tau_photon > 0:
            raise ShapeError(
                f"Shape `{self.kind.value}` needs positive tau_photon, "
                f"got {tau_photon!r}",
            )

    def _check_samples(self):
        if not self.samples or len(self.samples) < self.MIN_SAMPLES:
            raise ShapeError(
                f"Tabulated shape needs at least {self.MIN_SAMPLES} samples",
            )
        times = np.array([t for t, _ in self.samples])
        if np.any(np.diff(times) <= 0):
            raise ShapeError("Sample times must be strictly increasing")

    def __repr__(self):
        if self.kind is ShapeKind.TABULATED:
            return f"<ShapeSpec tabulated, {len(self.samples)} samples>"
        return f"<ShapeSpec {self.kind.value}, tau={self.tau_photon!r}>"


def _as_output(values: np.ndarray, t: Times) -> Times:
    if np.ndim(t) == 0:
        return float(values)
    return values


class BaseWaveform(PhotonWaveform, ABC):
    """
    Waveform defined on ``[0, duration]`` in its own time.

    Subclasses implement `_value`, `_d1` and `_d2` for local times inside
    the support. Scaling, shifting and zero extension are handled here.
    """

    def __init__(self, duration: float, n_steps: int = DEFAULT_N_STEPS):
        if not duration > 0:
            raise ShapeError(
                f"Photon duration must be positive, got {duration!r}",
            )
        self.duration = float(duration)
        self.n_steps = n_steps
        self.scale = 1.0
        self.offset = 0.0

    @property
    def support(self) -> TimeGrid:
        return TimeGrid(self.offset, self.offset + self.duration, self.n_steps)

    @property
    def key(self) -> Hashable:
        return (
            type(self).__name__, self._shape_key(),
            self.duration, self.scale, self.offset,
        )

    def _shape_key(self) -> Hashable:
        return None

    @abstractmethod
    def _value(self, s: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def _d1(self, s: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def _d2(self, s: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _evaluate(self, func, t: Times) -> Times:
        s = np.asarray(t, dtype=float) - self.offset
        inside = (s >= 0) & (s <= self.duration)
        local = np.clip(s, 0, self.duration)
        values = np.where(inside, self.scale * func(local), 0.0)
        return _as_output(values, t)

    def value(self, t: Times) -> Times:
        return self._evaluate(self._value, t)

    def d1(self, t: Times) -> Times:
        return self._evaluate(self._d1, t)

    def d2(self, t: Times) -> Times:
        return self._evaluate(self._d2, t)

    def sample(self, grid: Optional[TimeGrid] = None) -> np.ndarray:
        if grid is None:
            grid = self.support
        return self.value(grid.times())

    def _replace(self, **changes) -> "BaseWaveform":
        clone = copy.copy(self)
        for name, value in changes.items():
            setattr(clone, name, value)
        return clone

    def scaled(self, factor: float) -> "BaseWaveform":
        return self._replace(scale=self.scale * factor)

    def shifted(self, offset: float) -> "BaseWaveform":
        return self._replace(offset=self.offset + offset)

    def with_steps(self, n_steps: int) -> "BaseWaveform":
        return self._replace(n_steps=n_steps)

    def _panel_edges(self) -> np.ndarray:
        return np.linspace(0.0, self.duration, _DEFAULT_PANELS + 1)

    def norm2(self) -> float:
        """``∫|value(t)|² dt`` by composite Gauss-Legendre quadrature."""
        nodes, weights = np.polynomial.legendre.leggauss(_QUAD_ORDER)
        edges = self._panel_edges()
        left, right = edges[:-1, None], edges[1:, None]
        half = (right - left) / 2
        points = half * nodes + (left + right) / 2
        values = self.scale * self._value(points)
        return float(np.sum(half * weights * values ** 2))

    def normalized(self) -> "BaseWaveform":
        norm2 = self.norm2()
        if not norm2 > 0:
            raise ShapeError("Cannot normalize a waveform with zero norm")
        return self.scaled(1 / math.sqrt(norm2))

    def __repr__(self):
        return (
            f"<{type(self).__qualname__} duration={self.duration!r} "
            f"offset={self.offset!r} scale={self.scale!r}>"
        )
