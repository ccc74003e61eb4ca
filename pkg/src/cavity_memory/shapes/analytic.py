import math

import numpy as np

from cavity_memory.api.entities import DEFAULT_N_STEPS
from .base import BaseWaveform


class Sin2Waveform(BaseWaveform):
    """
    ``A·sin²(πt/τ)`` on ``[0, τ]``.

    ``∫sin⁴(πt/τ)dt = 3τ/8`` over the support, so ``A = √(8/(3τ))``.
    """

    def __init__(self, tau_photon: float, n_steps: int = DEFAULT_N_STEPS):
        super().__init__(duration=tau_photon, n_steps=n_steps)
        self.amplitude = math.sqrt(8 / (3 * self.duration))
        self.omega = math.pi / self.duration

    def _value(self, s: np.ndarray) -> np.ndarray:
        return self.amplitude * np.sin(self.omega * s) ** 2

    def _d1(self, s: np.ndarray) -> np.ndarray:
        return self.amplitude * self.omega * np.sin(2 * self.omega * s)

    def _d2(self, s: np.ndarray) -> np.ndarray:
        return (
            2 * self.amplitude * self.omega ** 2 *
            np.cos(2 * self.omega * s)
        )


class TwinPeakWaveform(BaseWaveform):
    """
    ``B·sin²(2πt/τ)·cos((π/2)(1 - t/τ))`` on ``[0, τ]``.

    The envelope equals ``sin(πt/(2τ))``, and the squared shape integrates
    to ``3τ/16``, so ``B = √(16/(3τ))``.
    """

    def __init__(self, tau_photon: float, n_steps: int = DEFAULT_N_STEPS):
        super().__init__(duration=tau_photon, n_steps=n_steps)
        self.amplitude = math.sqrt(16 / (3 * self.duration))
        self.omega = 2 * math.pi / self.duration
        self.nu = math.pi / (2 * self.duration)

    def _parts(self, s: np.ndarray):
        w, nu = self.omega, self.nu
        carrier = np.sin(w * s) ** 2
        carrier_d1 = w * np.sin(2 * w * s)
        carrier_d2 = 2 * w ** 2 * np.cos(2 * w * s)
        envelope = np.sin(nu * s)
        envelope_d1 = nu * np.cos(nu * s)
        envelope_d2 = -nu ** 2 * envelope
        return (
            carrier, carrier_d1, carrier_d2,
            envelope, envelope_d1, envelope_d2,
        )

    def _value(self, s: np.ndarray) -> np.ndarray:
        return self.amplitude * np.sin(self.omega * s) ** 2 * np.sin(
            self.nu * s,
        )

    def _d1(self, s: np.ndarray) -> np.ndarray:
        c, c1, _, e, e1, _ = self._parts(s)
        return self.amplitude * (c1 * e + c * e1)

    def _d2(self, s: np.ndarray) -> np.ndarray:
        c, c1, c2, e, e1, e2 = self._parts(s)
        return self.amplitude * (c2 * e + 2 * c1 * e1 + c * e2)


def make_sin2(
        tau_photon: float, n_steps: int = DEFAULT_N_STEPS,
) -> Sin2Waveform:
    return Sin2Waveform(tau_photon, n_steps=n_steps)


def make_twin_peak(
        tau_photon: float, n_steps: int = DEFAULT_N_STEPS,
) -> TwinPeakWaveform:
    return TwinPeakWaveform(tau_photon, n_steps=n_steps)
