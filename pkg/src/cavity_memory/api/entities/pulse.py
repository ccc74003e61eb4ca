from dataclasses import dataclass

import numpy as np

from cavity_memory.api.exceptions import GridMismatchError, SynthesisError
from .grid import TimeGrid


def frozen_array(values) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ControlPulse:
    """Real signed Rabi frequency sampled at the grid points, rad/s."""

    grid: TimeGrid
    omega: np.ndarray

    def __post_init__(self):
        omega = frozen_array(self.omega)
        if omega.shape != (len(self.grid),):
            raise GridMismatchError(
                f"Pulse has {omega.size} samples, "
                f"grid needs {len(self.grid)}",
            )
        if not np.all(np.isfinite(omega)):
            raise SynthesisError("Control pulse must be finite everywhere")
        object.__setattr__(self, "omega", omega)

    @classmethod
    def zeros(cls, grid: TimeGrid) -> "ControlPulse":
        return cls(grid=grid, omega=np.zeros(len(grid)))

    def peak(self) -> float:
        return float(np.max(np.abs(self.omega)))

    def at_midpoints(self) -> np.ndarray:
        # linear interpolation between neighbouring samples
        return 0.5 * (self.omega[:-1] + self.omega[1:])

    def __call__(self, t):
        return np.interp(t, self.grid.times(), self.omega)
