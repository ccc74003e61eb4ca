import math
from dataclasses import dataclass

import numpy as np

from cavity_memory.api.exceptions import InvalidGridError

DEFAULT_N_STEPS = 2 ** 14


@dataclass(frozen=True)
class TimeGrid:
    """
    Uniform time grid ``t_k = t_start + k·dt``, ``k = 0..n_steps``.

    Points are always computed from their index, never accumulated,
    and the last point is exactly ``t_stop``.
    """

    t_start: float
    t_stop: float
    n_steps: int = DEFAULT_N_STEPS

    def __post_init__(self):
        if not (math.isfinite(self.t_start) and math.isfinite(self.t_stop)):
            raise InvalidGridError("Grid bounds must be finite")
        if self.t_stop <= self.t_start:
            raise InvalidGridError(
                f"Grid must have t_stop > t_start, "
                f"got [{self.t_start!r}, {self.t_stop!r}]",
            )
        if int(self.n_steps) != self.n_steps or self.n_steps < 2:
            raise InvalidGridError(
                f"Grid needs at least 2 steps, got {self.n_steps!r}",
            )

    @property
    def dt(self) -> float:
        return (self.t_stop - self.t_start) / self.n_steps

    @property
    def duration(self) -> float:
        return self.t_stop - self.t_start

    def __len__(self) -> int:
        return self.n_steps + 1

    def time_at(self, k: int) -> float:
        if not 0 <= k <= self.n_steps:
            raise IndexError(k)
        if k == self.n_steps:
            return self.t_stop
        return self.t_start + k * self.dt

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_stop, self.n_steps + 1)

    def midpoints(self) -> np.ndarray:
        return self.t_start + (np.arange(self.n_steps) + 0.5) * self.dt

    def with_steps(self, n_steps: int) -> "TimeGrid":
        return TimeGrid(self.t_start, self.t_stop, n_steps)

    def shifted(self, offset: float) -> "TimeGrid":
        return TimeGrid(
            self.t_start + offset, self.t_stop + offset, self.n_steps,
        )

    def extended(self, tail: float) -> "TimeGrid":
        """Append whole steps of the same size covering at least `tail`."""
        if tail <= 0:
            return self
        extra = math.ceil(tail / self.dt)
        n_steps = self.n_steps + extra
        return TimeGrid(
            self.t_start, self.t_start + n_steps * self.dt, n_steps,
        )

    def contains(self, other: "TimeGrid") -> bool:
        return (
            self.t_start <= other.t_start and other.t_stop <= self.t_stop
        )

    def overlaps(self, other: "TimeGrid") -> bool:
        return (
            self.t_start < other.t_stop and other.t_start < self.t_stop
        )
