from scipy.integrate import trapezoid

from cavity_memory.api.entities import (
    AbsorptionReport, CavityParams, InitialState, StateTrajectory,
)
from cavity_memory.api.protocols import PhotonWaveform


def reflection_probability(traj: StateTrajectory) -> float:
    return float(trapezoid(traj.phi_out ** 2, traj.grid.times()))


def excitation_ledger(
        traj: StateTrajectory,
        w: PhotonWaveform,
        p: CavityParams,
        init: InitialState,
) -> AbsorptionReport:
    t = traj.grid.times()
    reflection = reflection_probability(traj)
    spont_loss = float(trapezoid(2 * p.gamma * traj.rho_xx, t))
    incoming = float(trapezoid(w.value(t) ** 2, t))
    final = float(traj.norm2()[-1])
    residual = abs(
        final + reflection + spont_loss - init.norm2() - incoming,
    )
    return AbsorptionReport(
        reflection=reflection,
        spont_loss=spont_loss,
        storage_efficiency=float(traj.rho_ee[-1]) - init.ce0 ** 2,
        conservation_residual=residual,
    )
