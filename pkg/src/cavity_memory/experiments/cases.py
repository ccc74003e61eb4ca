from dataclasses import dataclass
from enum import Enum
from logging import getLogger
from typing import Optional, Tuple

from cavity_memory.api.entities import (
    AbsorptionReport, CavityParams, ControlPulse, InitialState,
    StateTrajectory,
)
from cavity_memory.api.protocols import PhotonWaveform
from cavity_memory.dynamics import (
    empty_cavity_trajectory,
    excitation_ledger,
    ringdown_grid,
    simulate,
)
from cavity_memory.synthesis import PulseCache, synthesize_cached

logger = getLogger(__name__)


class AbsorptionCase(Enum):
    """
    Scenarios sharing one control pulse.

    EMPTY:
        no atom in the cavity, the photon is reflected
    GROUND:
        atom prepared in ``|g,0>``
    MATCHED:
        ``rho0`` of the population seeded in ``|e,0>``, as assumed by
        the synthesis
    """

    EMPTY = "empty"
    GROUND = "ground"
    MATCHED = "matched"


@dataclass(frozen=True, eq=False)
class CaseResult:
    case: AbsorptionCase
    trajectory: StateTrajectory
    report: AbsorptionReport


@dataclass(frozen=True, eq=False)
class AbsorptionCases:
    pulse: ControlPulse
    empty: CaseResult
    ground: CaseResult
    matched: CaseResult

    def results(self) -> Tuple[CaseResult, CaseResult, CaseResult]:
        return self.empty, self.ground, self.matched

    def reflections(self) -> Tuple[float, float, float]:
        return tuple(r.report.reflection for r in self.results())


def run_case(
        case: AbsorptionCase,
        w: PhotonWaveform,
        p: CavityParams,
        pulse: ControlPulse,
) -> CaseResult:
    if case is AbsorptionCase.EMPTY:
        init = InitialState.ground()
        trajectory = empty_cavity_trajectory(
            w, p.kappa, ringdown_grid(w, p.kappa, pulse.grid.n_steps),
        )
    else:
        if case is AbsorptionCase.MATCHED:
            init = InitialState.seeded(p.rho0)
        else:
            init = InitialState.ground()
        trajectory = simulate(w, pulse, p, init)
    report = excitation_ledger(trajectory, w, p, init)
    logger.debug("Case %s: %s", case.value, report)
    return CaseResult(case=case, trajectory=trajectory, report=report)


def run_absorption_cases(
        w: PhotonWaveform,
        p: CavityParams,
        n_steps: Optional[int] = None,
        cache: Optional[PulseCache] = None,
) -> AbsorptionCases:
    """Empty cavity, ground-state atom and seeded atom under one pulse."""
    grid = w.support
    if n_steps is not None:
        grid = grid.with_steps(n_steps)
    pulse = synthesize_cached(w, p, grid, cache=cache)
    results = {
        case: run_case(case, w, p, pulse) for case in AbsorptionCase
    }
    cases = AbsorptionCases(
        pulse=pulse,
        empty=results[AbsorptionCase.EMPTY],
        ground=results[AbsorptionCase.GROUND],
        matched=results[AbsorptionCase.MATCHED],
    )
    logger.info(
        "Reflection empty/ground/matched: %.6g / %.6g / %.3g",
        *cases.reflections(),
    )
    return cases
