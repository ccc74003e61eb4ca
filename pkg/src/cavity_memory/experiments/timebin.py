from logging import getLogger
from typing import Optional, Tuple

import numpy as np

from cavity_memory.api.entities import (
    AbsorptionReport, CavityParams, ControlPulse, DEFAULT_N_STEPS,
    InitialState,
)
from cavity_memory.api.entities.mapping import MappingReport, TimeBinQubit
from cavity_memory.api.entities.units import us_to_s
from cavity_memory.api.protocols import PhotonWaveform
from cavity_memory.dynamics import excitation_ledger, simulate
from cavity_memory.shapes import make_sin2
from cavity_memory.synthesis import PulseCache, synthesize_cached

logger = getLogger(__name__)

DEFAULT_TAU = us_to_s(3.14)
DEFAULT_GAP = us_to_s(0.5)


def make_timebin_qubit(
        alpha: complex,
        beta: complex,
        tau_photon: float = DEFAULT_TAU,
        gap: float = DEFAULT_GAP,
        n_steps: int = DEFAULT_N_STEPS,
) -> TimeBinQubit:
    """Two sin² bins of equal length separated by `gap`."""
    phi1 = make_sin2(tau_photon, n_steps=n_steps)
    phi2 = phi1.shifted(tau_photon + gap)
    return TimeBinQubit(phi1=phi1, phi2=phi2, alpha=alpha, beta=beta)


def absorb_bin(
        w: PhotonWaveform,
        p: CavityParams,
        seeded: bool = True,
        cache: Optional[PulseCache] = None,
) -> Tuple[ControlPulse, AbsorptionReport]:
    """
    Absorb a unit-amplitude bin in its own three-level system.

    The other bin addresses a different Λ-system through the opposite
    circular polarisation of its control pulse, so bins never interact.
    """
    pulse = synthesize_cached(w, p, w.support, cache=cache)
    if seeded:
        init = InitialState.seeded(p.rho0)
    else:
        init = InitialState.ground()
    report = excitation_ledger(simulate(w, pulse, p, init), w, p, init)
    return pulse, report


def stored_amplitude(
        w: PhotonWaveform,
        pulse: ControlPulse,
        p: CavityParams,
        init: InitialState,
        amplitude: complex,
) -> complex:
    """
    Final ``c_e`` left by ``amplitude·w`` on top of the initial state.

    The equations of motion are real and linear in the input, so the real
    and imaginary parts of `amplitude` are simulated separately and the
    evolution of `init` without a photon is subtracted.
    """
    background = 0.0
    if init.norm2() > 0:
        background = simulate(w.scaled(0.0), pulse, p, init).c_e[-1]
    result = 0j
    for part, unit in ((amplitude.real, 1), (amplitude.imag, 1j)):
        if part == 0:
            continue
        traj = simulate(w.scaled(part), pulse, p, init)
        result += unit * (traj.c_e[-1] - background)
    return complex(result)


def timebin_map(
        q: TimeBinQubit,
        p: CavityParams,
        seeded: bool = True,
        cache: Optional[PulseCache] = None,
) -> MappingReport:
    """
    Map ``alpha·phi1 + beta·phi2`` onto ``alpha|m=-1> + beta|m=+1>``.

    Each bin is driven by its qubit amplitude and the stored amplitude is
    read from the final ``c_e`` of that simulation.
    """
    pulse1, report1 = absorb_bin(q.phi1, p, seeded=seeded, cache=cache)
    pulse2, report2 = absorb_bin(q.phi2, p, seeded=seeded, cache=cache)
    if seeded:
        init = InitialState.seeded(p.rho0)
    else:
        init = InitialState.ground()
    amplitudes = np.array([
        stored_amplitude(q.phi1, pulse1, p, init, complex(q.alpha)),
        stored_amplitude(q.phi2, pulse2, p, init, complex(q.beta)),
    ], dtype=complex)
    pop_minus, pop_plus = np.abs(amplitudes) ** 2
    efficiency = float(pop_minus + pop_plus)
    if efficiency > 0:
        state = amplitudes / np.sqrt(efficiency)
        density_matrix = np.outer(state, state.conj())
        target = np.array([q.alpha, q.beta], dtype=complex)
        fidelity = float(abs(np.vdot(target, state)) ** 2)
    else:
        density_matrix = np.zeros((2, 2), dtype=complex)
        fidelity = 0.0
    logger.info(
        "Time-bin mapping: efficiency %.6g, fidelity %.12g",
        efficiency, fidelity,
    )
    return MappingReport(
        pop_minus=float(pop_minus),
        pop_plus=float(pop_plus),
        efficiency=efficiency,
        fidelity=min(fidelity, 1.0),
        amplitudes=amplitudes,
        density_matrix=density_matrix,
        pulses=(pulse1, pulse2),
        bin_reports=(report1, report2),
    )
