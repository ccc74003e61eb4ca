"""
Impedance-matching chain.

With ``phi_out = 0`` imposed at all times the equations of motion fix the
cavity amplitude, the excited-state amplitude and the product
``zeta = Omega·c_e`` from the photon alone. The continuity balance then
gives ``rho_ee`` and hence ``Omega``.

Resonant convention: ``g`` and ``phi_in`` are real, so ``c_g`` and ``c_e``
are real and ``c_x = i·cx_im`` is purely imaginary.
"""
import math
from dataclasses import dataclass
from logging import getLogger

import numpy as np
from scipy.integrate import cumulative_trapezoid

from cavity_memory.api.entities import CavityParams, cooperativity, TimeGrid
from cavity_memory.api.entities.pulse import frozen_array
from cavity_memory.api.exceptions import InfeasibleCoupling, OutsideSupportError
from cavity_memory.api.protocols import PhotonWaveform, Times

logger = getLogger(__name__)


def _check_support(w: PhotonWaveform, t: Times) -> None:
    support = w.support
    t = np.asarray(t)
    if np.any(t < support.t_start) or np.any(t > support.t_stop):
        raise OutsideSupportError(
            f"Time outside photon support "
            f"[{support.t_start!r}, {support.t_stop!r}]",
        )


def amplitude_cg(w: PhotonWaveform, p: CavityParams, t: Times) -> Times:
    _check_support(w, t)
    return w.value(t) / math.sqrt(2 * p.kappa)


def amplitude_cx(w: PhotonWaveform, p: CavityParams, t: Times) -> Times:
    """Imaginary part of ``c_x``."""
    _check_support(w, t)
    return (w.d1(t) - p.kappa * w.value(t)) / (p.g * math.sqrt(2 * p.kappa))


def cx_rate(w: PhotonWaveform, p: CavityParams, t: Times) -> Times:
    # time derivative of cx_im, taken from the waveform's own d2
    return (w.d2(t) - p.kappa * w.d1(t)) / (p.g * math.sqrt(2 * p.kappa))


def coupling_product_zeta(
        w: PhotonWaveform, p: CavityParams, t: Times,
) -> Times:
    """``zeta = Omega·c_e``."""
    cg = amplitude_cg(w, p, t)
    cx_im = amplitude_cx(w, p, t)
    return -2 * (cx_rate(w, p, t) + p.gamma * cx_im + p.g * cg)


def population_ee(
        w: PhotonWaveform, p: CavityParams, grid: TimeGrid,
) -> np.ndarray:
    """
    Population of ``|e,0>`` from the continuity balance.

    ``rho_ee = rho0 - rho_gg - rho_xx + ∫(|phi_in|² - 2γ·rho_xx)dt'``,
    integrated with the trapezoidal rule on `grid`.
    """
    t = grid.times()
    cg = amplitude_cg(w, p, t)
    cx_im = amplitude_cx(w, p, t)
    rate = w.value(t) ** 2 - 2 * p.gamma * cx_im ** 2
    gained = cumulative_trapezoid(rate, t, initial=0.0)
    rho_ee = p.rho0 - cg ** 2 - cx_im ** 2 + gained
    negative = np.flatnonzero(rho_ee < 0)
    if negative.size:
        k = negative[0]
        c = cooperativity(p)
        raise InfeasibleCoupling(
            f"Impedance matching impossible at cooperativity C={c:.6g}: "
            f"rho_ee={rho_ee[k]:.3g} < 0 at t={t[k]:.6g} s",
            cooperativity=c,
            time=float(t[k]),
            rho_ee=float(rho_ee[k]),
        )
    return rho_ee


@dataclass(frozen=True, eq=False)
class SynthesisIntermediates:
    grid: TimeGrid
    cg: np.ndarray
    cx_im: np.ndarray
    zeta: np.ndarray
    rho_ee: np.ndarray

    def __post_init__(self):
        for name in ("cg", "cx_im", "zeta", "rho_ee"):
            object.__setattr__(self, name, frozen_array(getattr(self, name)))


def synthesis_intermediates(
        w: PhotonWaveform, p: CavityParams, grid: TimeGrid,
) -> SynthesisIntermediates:
    t = grid.times()
    logger.debug("Synthesis chain on %s points for %s", len(grid), p)
    return SynthesisIntermediates(
        grid=grid,
        cg=amplitude_cg(w, p, t),
        cx_im=amplitude_cx(w, p, t),
        zeta=coupling_product_zeta(w, p, t),
        rho_ee=population_ee(w, p, grid),
    )
