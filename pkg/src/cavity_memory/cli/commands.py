import sys
from contextlib import contextmanager
from logging import getLogger
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, TextIO, Tuple

from cavity_memory import __version__
from cavity_memory.api.entities import CavityParams, InitialState
from cavity_memory.api.entities.units import rad_to_mhz, s_to_us
from cavity_memory.api.exceptions import ConfigError
from cavity_memory.dynamics import (
    empty_cavity_trajectory,
    excitation_ledger,
    ringdown_grid,
    simulate,
)
from cavity_memory.experiments import (
    make_timebin_qubit,
    sweep_cooperativity,
    sweep_rho0,
    timebin_map,
)
from cavity_memory.shapes import make_shape
from cavity_memory.synthesis import (
    chain_residual,
    check_feasible,
    pulse_from_intermediates,
    synthesis_intermediates,
    synthesize_control,
)
from .config import (
    Experiment, InitMode, normalize_amplitudes, RunConfig, SweepAxis,
)
from .output import (
    complex_matrix,
    pulse_rows,
    read_pulse_csv,
    render_header,
    render_manifest,
    write_csv,
    write_json,
)

logger = getLogger(__name__)

PULSE_COLUMNS = ("t_us", "phi_in", "omega_mhz", "rho_ee")
TRAJECTORY_COLUMNS = (
    "t_us", "phi_in", "phi_out", "c_e", "c_x_im", "c_g",
    "rho_ee", "rho_gg", "rho_xx",
)
SWEEP_COLUMNS = ("axis", "value", "metric", "result", "feasible", "error")

Residuals = List[Tuple[str, float]]


@contextmanager
def _open(path: Optional[Path]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with path.open("w", newline="", encoding="utf-8") as f:
        yield f


def _side_path(out: Path, suffix: str) -> Path:
    return out.with_name(f"{out.stem}.{suffix}")


def _header(config: RunConfig, notes: Tuple[str, ...] = ()) -> str:
    return render_header(
        version=__version__,
        command=config.experiment.value,
        parameters=config.parameter_rows(),
        notes=notes,
    )


def _write_manifest(config: RunConfig, residuals: Residuals) -> None:
    if config.out is None:
        return
    path = _side_path(config.out, "manifest.ini")
    text = render_manifest(
        version=__version__,
        command=config.experiment.value,
        sections=config.sections(),
        residuals=residuals,
    )
    path.write_text(text, encoding="utf-8")
    logger.info("Manifest written to %s", path)


def cmd_derive(config: RunConfig) -> int:
    """Impedance-matching control pulse for the configured photon."""
    p = config.params
    w = make_shape(config.shape, config.n_steps)
    grid = w.support
    check_feasible(p)
    chain = synthesis_intermediates(w, p, grid)
    pulse = pulse_from_intermediates(chain, omega_max=config.omega_max)
    residual = chain_residual(chain, pulse, w, p)
    logger.info(
        "Derived pulse: peak %.6g MHz, chain residual %.3g",
        rad_to_mhz(pulse.peak()), residual,
    )
    rows = pulse_rows(
        pulse, [w.sample(grid), rad_to_mhz(pulse.omega), chain.rho_ee],
    )
    with _open(config.out) as f:
        write_csv(f, _header(config), PULSE_COLUMNS, rows)
    _write_manifest(config, [("chain_residual", residual)])
    return 0


def cmd_simulate(config: RunConfig) -> int:
    """Trajectory and excitation bookkeeping for one absorption run."""
    p = config.params
    w = make_shape(config.shape, config.n_steps)
    if config.init is InitMode.EMPTY:
        init = InitialState.ground()
        trajectory = empty_cavity_trajectory(
            w, p.kappa, ringdown_grid(w, p.kappa, config.n_steps),
        )
    else:
        grid = w.support
        if config.pulse_path is not None:
            pulse = read_pulse_csv(config.pulse_path, grid)
        else:
            pulse = synthesize_control(w, p, grid, config.omega_max)
        if config.init is InitMode.MATCHED:
            init = InitialState.seeded(p.rho0)
        else:
            init = InitialState.ground()
        trajectory = simulate(w, pulse, p, init)
    report = excitation_ledger(trajectory, w, p, init)
    logger.info("Simulated %s: %s", config.init.value, report)
    report_data = {
        "conservation_residual": report.conservation_residual,
        "reflection": report.reflection,
        "spont_loss": report.spont_loss,
        "storage_efficiency": report.storage_efficiency,
    }
    if config.out is None:
        write_json(sys.stdout, report_data)
        return 0
    t = trajectory
    rows = zip(
        s_to_us(t.grid.times()), t.phi_in, t.phi_out, t.c_e, t.cx_im,
        t.c_g, t.rho_ee, t.rho_gg, t.rho_xx,
    )
    with _open(config.out) as f:
        write_csv(f, _header(config), TRAJECTORY_COLUMNS, rows)
    with _open(_side_path(config.out, "report.json")) as f:
        write_json(f, report_data)
    _write_manifest(
        config, [("conservation_residual", report.conservation_residual)],
    )
    return 0


def _rho0_rows(config: RunConfig, w) -> Tuple[list, Residuals]:
    points = sweep_rho0(
        w, config.params, config.sweep_values,
        n_steps=config.n_steps, jobs=config.jobs,
    )
    rows = []
    for point in points:
        for metric, value in (
                ("peak_omega_mhz", point.peak_omega),
                ("reflection", point.reflection),
        ):
            if value is not None and metric == "peak_omega_mhz":
                value = rad_to_mhz(value)
            rows.append((
                "rho0", point.rho0, metric, value,
                point.feasible, point.error,
            ))
    feasible = [point for point in points if point.feasible]
    if config.out is not None and feasible:
        grid = feasible[0].pulse.grid
        columns = ["t_us"] + [
            f"omega_mhz@rho0={point.rho0:.17g}" for point in feasible
        ]
        with _open(_side_path(config.out, "pulses.csv")) as f:
            write_csv(
                f, _header(config), columns,
                zip(
                    s_to_us(grid.times()),
                    *(rad_to_mhz(point.pulse.omega) for point in feasible),
                ),
            )
    residuals = [
        (f"rho0_{point.rho0:.17g}.reflection", point.reflection)
        for point in feasible
    ]
    return rows, residuals


def _cooperativity_rows(config: RunConfig, w) -> Tuple[list, Residuals]:
    p: CavityParams = config.params
    points = sweep_cooperativity(
        w, p.kappa, p.gamma, config.sweep_values,
        rho0=p.rho0, n_steps=config.n_steps, jobs=config.jobs,
    )
    rows = []
    for point in points:
        for metric, value in (
                ("efficiency", point.efficiency),
                ("mismatch", point.mismatch),
                ("optimum", point.optimum),
        ):
            rows.append((
                "cooperativity", point.cooperativity, metric, value,
                point.feasible, point.error,
            ))
    residuals = [
        (f"c_{point.cooperativity:.17g}.mismatch", point.mismatch)
        for point in points if point.feasible
    ]
    return rows, residuals


def cmd_sweep(config: RunConfig) -> int:
    """Long-format table, one row per swept value and metric."""
    if not config.sweep_values:
        raise ConfigError(
            f"[sweep] values: empty {config.sweep_axis.value} axis",
        )
    w = make_shape(config.shape, config.n_steps)
    if config.sweep_axis is SweepAxis.RHO0:
        rows, residuals = _rho0_rows(config, w)
    else:
        rows, residuals = _cooperativity_rows(config, w)
    logger.info(
        "Swept %s over %s values", config.sweep_axis.value,
        len(config.sweep_values),
    )
    with _open(config.out) as f:
        write_csv(f, _header(config), SWEEP_COLUMNS, rows)
    _write_manifest(config, residuals)
    return 0


def cmd_timebin(config: RunConfig) -> int:
    """Map a time-bin qubit onto the two Zeeman sublevels."""
    alpha, beta = normalize_amplitudes(config.alpha, config.beta)
    tau = config.shape.tau_photon
    if tau is None:
        raise ConfigError("[photon] time-bin mapping needs an analytic shape")
    qubit = make_timebin_qubit(
        alpha, beta, tau_photon=tau, gap=config.gap, n_steps=config.n_steps,
    )
    report = timebin_map(qubit, config.params)
    data = {
        "alpha": {"re": alpha.real, "im": alpha.imag},
        "beta": {"re": beta.real, "im": beta.imag},
        "density_matrix": complex_matrix(report.density_matrix),
        "efficiency": report.efficiency,
        "fidelity": report.fidelity,
        "pop_minus": report.pop_minus,
        "pop_plus": report.pop_plus,
    }
    with _open(config.out) as f:
        write_json(f, data)
    _write_manifest(config, [
        (f"conservation_residual_bin{k}", r.conservation_residual)
        for k, r in enumerate(report.bin_reports, start=1)
    ])
    return 0


COMMANDS: Dict[Experiment, Callable[[RunConfig], int]] = {
    Experiment.DERIVE: cmd_derive,
    Experiment.SIMULATE: cmd_simulate,
    Experiment.SWEEP: cmd_sweep,
    Experiment.TIMEBIN: cmd_timebin,
}


def run_command(config: RunConfig) -> int:
    return COMMANDS[config.experiment](config)
