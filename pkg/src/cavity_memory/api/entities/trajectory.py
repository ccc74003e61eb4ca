import math
from dataclasses import dataclass

import numpy as np

from cavity_memory.api.exceptions import InvalidParamsError
from .grid import TimeGrid
from .pulse import frozen_array


@dataclass(frozen=True)
class InitialState:
    """
    Initial amplitudes of ``|e,0>``, ``|x,0>`` and ``|g,1>``.

    ``c_x = i·cx_im0``; all zeros means the system starts in ``|g,0>``.
    """

    ce0: float = 0.0
    cx_im0: float = 0.0
    cg0: float = 0.0

    def __post_init__(self):
        if self.norm2() > 1 + 1e-12:
            raise InvalidParamsError(
                f"Initial state norm exceeds one: {self.norm2()!r}",
            )

    @classmethod
    def ground(cls) -> "InitialState":
        return cls()

    @classmethod
    def seeded(cls, rho0: float) -> "InitialState":
        return cls(ce0=math.sqrt(rho0))

    def norm2(self) -> float:
        return self.ce0 ** 2 + self.cx_im0 ** 2 + self.cg0 ** 2

    def as_array(self) -> np.ndarray:
        return np.array([self.ce0, self.cx_im0, self.cg0])


@dataclass(frozen=True, eq=False)
class StateTrajectory:
    """
    Amplitudes sampled on the grid.

    ``c_x = i·cx_im``, ``c_g`` is the amplitude of ``|g,1>`` and therefore
    the intracavity amplitude. ``phi_in`` and ``phi_out`` are running-wave
    amplitudes in s^(-1/2).
    """

    grid: TimeGrid
    c_e: np.ndarray
    cx_im: np.ndarray
    c_g: np.ndarray
    phi_in: np.ndarray
    phi_out: np.ndarray

    def __post_init__(self):
        for name in ("c_e", "cx_im", "c_g", "phi_in", "phi_out"):
            object.__setattr__(self, name, frozen_array(getattr(self, name)))

    @property
    def rho_ee(self) -> np.ndarray:
        return self.c_e ** 2

    @property
    def rho_xx(self) -> np.ndarray:
        return self.cx_im ** 2

    @property
    def rho_gg(self) -> np.ndarray:
        return self.c_g ** 2

    def norm2(self) -> np.ndarray:
        return self.rho_ee + self.rho_xx + self.rho_gg


@dataclass(frozen=True)
class AbsorptionReport:
    """
    Excitation bookkeeping of one simulation.

    ``reflection + spont_loss + storage_efficiency`` plus what is left in
    ``|g,1>`` and ``|x,0>`` at the end accounts for the incoming photon
    and the initial non-``|e,0>`` population, within
    ``conservation_residual``.
    """

    reflection: float
    spont_loss: float
    storage_efficiency: float
    conservation_residual: float
