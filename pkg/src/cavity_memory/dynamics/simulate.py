import math
from logging import getLogger
from typing import Optional, Tuple

import numpy as np

from cavity_memory.api.entities import (
    CavityParams, ControlPulse, DEFAULT_N_STEPS, InitialState,
    StateTrajectory, TimeGrid,
)
from cavity_memory.api.exceptions import GridMismatchError
from cavity_memory.api.protocols import PhotonWaveform
from .integrator import integrate_cavity, integrate_three_level

logger = getLogger(__name__)

# cavity lifetimes appended after the photon for an empty cavity to drain
RINGDOWN_DECAYS = 20.0


def ringdown_grid(
        w: PhotonWaveform,
        kappa: float,
        n_steps: Optional[int] = None,
) -> TimeGrid:
    grid = w.support
    if n_steps is not None:
        grid = grid.with_steps(n_steps)
    return grid.extended(RINGDOWN_DECAYS / kappa)


def simulate(
        w: PhotonWaveform,
        pulse: ControlPulse,
        p: CavityParams,
        init: InitialState,
        grid: Optional[TimeGrid] = None,
) -> StateTrajectory:
    """
    Integrate the atom-cavity equations of motion driven by `w` and `pulse`.

    The mirror reflectivity in the output relation is one:
    ``phi_out = √(2κ)·c_g - phi_in``.
    """
    if grid is None:
        grid = pulse.grid
    if pulse.grid != grid:
        raise GridMismatchError(
            f"Pulse grid {pulse.grid} does not match requested grid {grid}",
        )
    t = grid.times()
    sqrt_2k = math.sqrt(2 * p.kappa)
    phi_in = w.value(t)
    states = integrate_three_level(
        y0=(init.ce0, init.cx_im0, init.cg0),
        dt=grid.dt,
        omega=pulse.omega,
        omega_mid=pulse.at_midpoints(),
        drive=sqrt_2k * phi_in,
        drive_mid=sqrt_2k * w.value(grid.midpoints()),
        g=p.g,
        kappa=p.kappa,
        gamma=p.gamma,
    )
    c_e, cx_im, c_g = states.T
    logger.debug(
        "Simulated %s steps, final rho_ee=%.6g", grid.n_steps, c_e[-1] ** 2,
    )
    return StateTrajectory(
        grid=grid,
        c_e=c_e,
        cx_im=cx_im,
        c_g=c_g,
        phi_in=phi_in,
        phi_out=sqrt_2k * c_g - phi_in,
    )


def empty_cavity_response(
        w: PhotonWaveform,
        kappa: float,
        grid: TimeGrid,
) -> Tuple[np.ndarray, np.ndarray]:
    """Intracavity amplitude and reflected field without an atom."""
    sqrt_2k = math.sqrt(2 * kappa)
    phi_in = w.value(grid.times())
    c_cav = integrate_cavity(
        c0=0.0,
        dt=grid.dt,
        drive=sqrt_2k * phi_in,
        drive_mid=sqrt_2k * w.value(grid.midpoints()),
        kappa=kappa,
    )
    return c_cav, sqrt_2k * c_cav - phi_in


def empty_cavity_trajectory(
        w: PhotonWaveform,
        kappa: float,
        grid: Optional[TimeGrid] = None,
) -> StateTrajectory:
    if grid is None:
        grid = ringdown_grid(w, kappa)
    c_cav, phi_out = empty_cavity_response(w, kappa, grid)
    zeros = np.zeros(len(grid))
    return StateTrajectory(
        grid=grid,
        c_e=zeros,
        cx_im=zeros,
        c_g=c_cav,
        phi_in=w.value(grid.times()),
        phi_out=phi_out,
    )


def default_grid(
        w: PhotonWaveform, n_steps: int = DEFAULT_N_STEPS,
) -> TimeGrid:
    return w.support.with_steps(n_steps)
