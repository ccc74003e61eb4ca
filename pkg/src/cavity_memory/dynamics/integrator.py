"""
Classical fixed-step RK4 for the resonant equations of motion.

State is ``(c_e, cx_im, c_g)`` with ``c_x = i·cx_im``::

    d c_e / dt   =  Omega·cx_im / 2
    d cx_im / dt = -Omega·c_e / 2 - γ·cx_im - g·c_g
    d c_g / dt   =  g·cx_im - κ·c_g + √(2κ)·phi_in

Drives are supplied at the grid points and at the step midpoints, so the
trajectory stays aligned with the synthesis grid.
"""
from typing import Sequence, Tuple

import numpy as np


def integrate_three_level(
        y0: Tuple[float, float, float],
        dt: float,
        omega: Sequence[float],
        omega_mid: Sequence[float],
        drive: Sequence[float],
        drive_mid: Sequence[float],
        g: float,
        kappa: float,
        gamma: float,
) -> np.ndarray:
    """
    Integrate over ``len(omega) - 1`` steps.

    `drive` is ``√(2κ)·phi_in``. Returns an ``(n + 1, 3)`` array.
    """
    # plain floats, a 3-vector is far below numpy's break-even size
    omega = list(map(float, omega))
    omega_mid = list(map(float, omega_mid))
    drive = list(map(float, drive))
    drive_mid = list(map(float, drive_mid))
    n_steps = len(omega) - 1
    out = np.empty((n_steps + 1, 3))
    ce, x, cg = map(float, y0)
    out[0] = ce, x, cg
    half = 0.5 * dt
    sixth = dt / 6

    def rates(ce, x, cg, o, f):
        return (
            0.5 * o * x,
            -0.5 * o * ce - gamma * x - g * cg,
            g * x - kappa * cg + f,
        )

    for k in range(n_steps):
        o0, om, o1 = omega[k], omega_mid[k], omega[k + 1]
        f0, fm, f1 = drive[k], drive_mid[k], drive[k + 1]
        a1, b1, c1 = rates(ce, x, cg, o0, f0)
        a2, b2, c2 = rates(
            ce + half * a1, x + half * b1, cg + half * c1, om, fm,
        )
        a3, b3, c3 = rates(
            ce + half * a2, x + half * b2, cg + half * c2, om, fm,
        )
        a4, b4, c4 = rates(ce + dt * a3, x + dt * b3, cg + dt * c3, o1, f1)
        ce += sixth * (a1 + 2 * a2 + 2 * a3 + a4)
        x += sixth * (b1 + 2 * b2 + 2 * b3 + b4)
        cg += sixth * (c1 + 2 * c2 + 2 * c3 + c4)
        out[k + 1] = ce, x, cg
    return out


def integrate_cavity(
        c0: float,
        dt: float,
        drive: Sequence[float],
        drive_mid: Sequence[float],
        kappa: float,
) -> np.ndarray:
    """RK4 for ``d c / dt = -κ·c + drive`` with ``drive = √(2κ)·phi_in``."""
    drive = list(map(float, drive))
    drive_mid = list(map(float, drive_mid))
    n_steps = len(drive) - 1
    out = np.empty(n_steps + 1)
    c = float(c0)
    out[0] = c
    half = 0.5 * dt
    for k in range(n_steps):
        f0, fm, f1 = drive[k], drive_mid[k], drive[k + 1]
        k1 = -kappa * c + f0
        k2 = -kappa * (c + half * k1) + fm
        k3 = -kappa * (c + half * k2) + fm
        k4 = -kappa * (c + dt * k3) + f1
        c += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        out[k + 1] = c
    return out
