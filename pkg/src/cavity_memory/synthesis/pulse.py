from logging import getLogger
from typing import Optional

import numpy as np

from cavity_memory.api.entities import (
    CavityParams, ControlPulse, cooperativity, TimeGrid,
)
from cavity_memory.api.exceptions import (
    DivergentPulse, InfeasibleCoupling, PulseLimitExceeded, ZeroRho0,
)
from cavity_memory.api.protocols import PhotonWaveform
from .chain import (
    cx_rate, synthesis_intermediates, SynthesisIntermediates,
)

logger = getLogger(__name__)

# below this population Omega is considered divergent
EPS_DIV = 1e-12
MIN_COOPERATIVITY = 0.5
# relative slack on the C > 1/2 bound for g rebuilt from a cooperativity
_COOPERATIVITY_RTOL = 1e-9


def check_feasible(p: CavityParams) -> None:
    if p.rho0 == 0:
        raise ZeroRho0(
            "rho0 = 0: the control pulse does not converge to a finite "
            "function, seed a small population in |e,0>",
        )
    c = cooperativity(p)
    if c <= MIN_COOPERATIVITY * (1 + _COOPERATIVITY_RTOL):
        raise InfeasibleCoupling(
            f"Impedance matching needs cooperativity C > 1/2, got C={c:.6g}",
            cooperativity=c,
        )


def pulse_from_intermediates(
        chain: SynthesisIntermediates,
        omega_max: Optional[float] = None,
) -> ControlPulse:
    rho_ee, zeta = chain.rho_ee, chain.zeta
    divergent = np.flatnonzero((rho_ee < EPS_DIV) & (zeta != 0))
    if divergent.size:
        k = divergent[0]
        t = chain.grid.time_at(int(k))
        raise DivergentPulse(
            f"Control pulse diverges at t={t:.6g} s "
            f"(rho_ee={rho_ee[k]:.3g}, zeta={zeta[k]:.3g})",
            time=t,
            rho_ee=float(rho_ee[k]),
        )
    omega = np.zeros_like(zeta)
    regular = rho_ee >= EPS_DIV
    omega[regular] = zeta[regular] / np.sqrt(rho_ee[regular])
    pulse = ControlPulse(grid=chain.grid, omega=omega)
    if omega_max is not None and pulse.peak() > omega_max:
        raise PulseLimitExceeded(
            f"Peak Rabi frequency {pulse.peak():.6g} rad/s exceeds "
            f"the limit {omega_max:.6g} rad/s",
            peak=pulse.peak(),
            limit=omega_max,
        )
    return pulse


def synthesize_control(
        w: PhotonWaveform,
        p: CavityParams,
        grid: Optional[TimeGrid] = None,
        omega_max: Optional[float] = None,
) -> ControlPulse:
    """
    Derive the unique control pulse absorbing `w` without reflection.

    :param w: incoming photon
    :param p: cavity parameters, ``p.rho0`` is the seeded population
    :param grid: sampling grid inside the photon support,
        defaults to the support itself
    :param omega_max: optional cap on ``|Omega|``, rad/s
    :raises ZeroRho0: if ``p.rho0 == 0``
    :raises InfeasibleCoupling: if ``C <= 1/2`` or ``rho_ee`` turns negative
    :raises DivergentPulse: if ``rho_ee`` vanishes where ``zeta`` does not
    :raises PulseLimitExceeded: if the pulse exceeds `omega_max`
    """
    check_feasible(p)
    if grid is None:
        grid = w.support
    chain = synthesis_intermediates(w, p, grid)
    pulse = pulse_from_intermediates(chain, omega_max=omega_max)
    logger.debug(
        "Synthesized pulse: C=%.4g, rho0=%.3g, peak=%.6g rad/s",
        cooperativity(p), p.rho0, pulse.peak(),
    )
    return pulse


def chain_residual(
        chain: SynthesisIntermediates,
        pulse: ControlPulse,
        w: PhotonWaveform,
        p: CavityParams,
) -> float:
    """
    Relative sup-norm residual of ``Omega·c_e = 2[-d(cx_im)/dt - γ·cx_im
    - g·c_g]`` with ``c_e = √rho_ee`` substituted back.
    """
    t = chain.grid.times()
    lhs = pulse.omega * np.sqrt(chain.rho_ee)
    rhs = -2 * (cx_rate(w, p, t) + p.gamma * chain.cx_im + p.g * chain.cg)
    scale = np.max(np.abs(rhs))
    if scale == 0:
        return float(np.max(np.abs(lhs)))
    return float(np.max(np.abs(lhs - rhs)) / scale)
