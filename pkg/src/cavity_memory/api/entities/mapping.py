import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from cavity_memory.api.exceptions import NormalizationError, OverlapError
from cavity_memory.api.protocols import PhotonWaveform
from .pulse import ControlPulse
from .trajectory import AbsorptionReport

NORM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class TimeBinQubit:
    """Photonic qubit ``alpha·phi1(t) + beta·phi2(t)`` in disjoint bins."""

    phi1: PhotonWaveform
    phi2: PhotonWaveform
    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1) > NORM_TOLERANCE:
            raise NormalizationError(
                f"|alpha|^2 + |beta|^2 must be 1, got {norm!r}",
            )
        if self.phi1.support.overlaps(self.phi2.support):
            raise OverlapError(
                "Time bins must not overlap: "
                f"[{self.phi1.support.t_start!r}, "
                f"{self.phi1.support.t_stop!r}] and "
                f"[{self.phi2.support.t_start!r}, "
                f"{self.phi2.support.t_stop!r}]",
            )

    @classmethod
    def normalized(
            cls,
            phi1: PhotonWaveform,
            phi2: PhotonWaveform,
            alpha: complex,
            beta: complex,
    ) -> "TimeBinQubit":
        norm = math.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
        if norm == 0:
            raise NormalizationError("Both amplitudes are zero")
        return cls(phi1=phi1, phi2=phi2, alpha=alpha / norm, beta=beta / norm)


@dataclass(frozen=True, eq=False)
class MappingReport:
    """
    Result of mapping a time-bin qubit onto ``|m=-1>`` and ``|m=+1>``.

    ``amplitudes`` are the final ``c_e`` of each bin with the seed
    background removed. ``density_matrix`` is the atomic state conditioned
    on a successful absorption, ordered as (``|m=-1>``, ``|m=+1>``).
    """

    pop_minus: float
    pop_plus: float
    efficiency: float
    fidelity: float
    amplitudes: np.ndarray
    density_matrix: np.ndarray
    pulses: Tuple[ControlPulse, ControlPulse]
    bin_reports: Tuple[AbsorptionReport, AbsorptionReport]
