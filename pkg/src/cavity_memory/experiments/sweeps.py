from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from logging import getLogger
from typing import Callable, Iterable, List, Optional, Sequence, TypeVar

from cavity_memory.api.entities import (
    CavityParams, ControlPulse, DEFAULT_RHO0, g_for_cooperativity,
    InitialState, optimal_efficiency, TimeGrid,
)
from cavity_memory.api.exceptions import InvalidParamsError, SynthesisError
from cavity_memory.api.protocols import PhotonWaveform
from cavity_memory.dynamics import excitation_ledger, simulate
from cavity_memory.synthesis import synthesize_control

logger = getLogger(__name__)

R = TypeVar("R")


@dataclass(frozen=True, eq=False)
class Rho0Point:
    rho0: float
    feasible: bool
    pulse: Optional[ControlPulse] = None
    peak_omega: Optional[float] = None
    reflection: Optional[float] = None
    error: Optional[str] = None


@dataclass(frozen=True)
class CooperativityPoint:
    cooperativity: float
    feasible: bool
    g: Optional[float] = None
    optimum: Optional[float] = None
    efficiency: Optional[float] = None
    mismatch: Optional[float] = None
    error: Optional[str] = None


def _map_points(
        func: Callable[..., R], args: Sequence[tuple], jobs: int,
) -> List[R]:
    # results come back in input order whatever the completion order
    if jobs <= 1 or len(args) <= 1:
        return [func(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(func, *zip(*args)))


def _grid(w: PhotonWaveform, n_steps: Optional[int]) -> TimeGrid:
    if n_steps is None:
        return w.support
    return w.support.with_steps(n_steps)


def rho0_point(
        w: PhotonWaveform, base: CavityParams, rho0: float, grid: TimeGrid,
) -> Rho0Point:
    try:
        p = base.with_rho0(rho0)
        pulse = synthesize_control(w, p, grid)
    except (InvalidParamsError, SynthesisError) as e:
        logger.warning("rho0=%s infeasible: %s", rho0, e)
        return Rho0Point(
            rho0=rho0, feasible=False, error=type(e).__name__,
        )
    init = InitialState.seeded(p.rho0)
    trajectory = simulate(w, pulse, p, init)
    report = excitation_ledger(trajectory, w, p, init)
    logger.debug("rho0=%s: peak %.6g, %s", p.rho0, pulse.peak(), report)
    return Rho0Point(
        rho0=p.rho0,
        feasible=True,
        pulse=pulse,
        peak_omega=pulse.peak(),
        reflection=report.reflection,
    )


def sweep_rho0(
        w: PhotonWaveform,
        p: CavityParams,
        rho0_list: Iterable[float],
        n_steps: Optional[int] = None,
        jobs: int = 1,
) -> List[Rho0Point]:
    """Control pulse and its round-trip reflection for every ``rho0``."""
    grid = _grid(w, n_steps)
    args = [(w, p, rho0, grid) for rho0 in rho0_list]
    return _map_points(rho0_point, args, jobs)


def cooperativity_point(
        w: PhotonWaveform,
        kappa: float,
        gamma: float,
        c: float,
        rho0: float,
        grid: TimeGrid,
) -> CooperativityPoint:
    g = optimum = None
    try:
        g = g_for_cooperativity(c, kappa, gamma)
        optimum = optimal_efficiency(c)
        p = CavityParams(g=g, kappa=kappa, gamma=gamma, rho0=rho0)
        pulse = synthesize_control(w, p, grid)
    except (InvalidParamsError, SynthesisError) as e:
        logger.warning("C=%s infeasible: %s", c, e)
        return CooperativityPoint(
            cooperativity=c, feasible=False, g=g, optimum=optimum,
            error=type(e).__name__,
        )
    init = InitialState.seeded(rho0)
    report = excitation_ledger(simulate(w, pulse, p, init), w, p, init)
    logger.debug("C=%s: %s", c, report)
    return CooperativityPoint(
        cooperativity=c,
        g=g,
        feasible=True,
        optimum=optimum,
        efficiency=report.storage_efficiency,
        mismatch=report.reflection,
    )


def sweep_cooperativity(
        w: PhotonWaveform,
        kappa: float,
        gamma: float,
        c_list: Iterable[float],
        rho0: float = DEFAULT_RHO0,
        n_steps: Optional[int] = None,
        jobs: int = 1,
) -> List[CooperativityPoint]:
    """
    Storage efficiency and impedance mismatch versus cooperativity.

    ``kappa`` and ``gamma`` are held fixed, ``g = √(2κγC)``.
    Infeasible points are returned with ``feasible=False``.
    """
    grid = _grid(w, n_steps)
    args = [(w, kappa, gamma, c, rho0, grid) for c in c_list]
    return _map_points(cooperativity_point, args, jobs)
