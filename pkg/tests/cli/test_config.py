import pytest

from cavity_memory.api.entities import DEFAULT_N_STEPS
from cavity_memory.api.entities.units import mhz_to_rad, us_to_s
from cavity_memory.api.exceptions import ConfigError, NormalizationError
from cavity_memory.cli.config import (
    Experiment, InitMode, load_config, normalize_amplitudes,
    parse_amplitude, SweepAxis,
)
from cavity_memory.shapes import ShapeKind


def test_defaults() -> None:
    config = load_config(None, Experiment.DERIVE)
    assert config.params.g == pytest.approx(mhz_to_rad(15))
    assert config.params.rho0 == 0.005
    assert config.shape.kind is ShapeKind.SIN2
    assert config.shape.tau_photon == pytest.approx(us_to_s(3.14))
    assert config.n_steps == DEFAULT_N_STEPS
    assert config.init is InitMode.MATCHED
    assert config.sweep_axis is SweepAxis.COOPERATIVITY
    assert config.sweep_values == ()
    assert config.omega_max is None
    assert "omega_max_mhz" not in config.raw.get("derive", {})
    assert ("cavity.g_mhz", "15.0") in config.parameter_rows()


def test_file_and_overrides(write_config) -> None:
    path = write_config(
        "[cavity]\ng_mhz = 20\n"
        "[grid]\nn_steps = 128\n"
        "[sweep]\naxis = RHO0\nvalues = 0.01, 0.02\n",
    )
    config = load_config(
        path, Experiment.SWEEP,
        overrides={"grid.n_steps": "64", "sweep.jobs": None},
    )
    assert config.params.g == pytest.approx(mhz_to_rad(20))
    assert config.n_steps == 64
    assert config.jobs == 1
    assert config.sweep_axis is SweepAxis.RHO0
    assert config.sweep_values == (0.01, 0.02)


def test_sections_sorted(write_config) -> None:
    config = load_config(write_config("[photon]\nshape = twin_peak\n"),
                         Experiment.DERIVE)
    names = [section for section, _ in config.sections()]
    assert names == sorted(names)
    for _, values in config.sections():
        keys = [key for key, _ in values]
        assert keys == sorted(keys)


@pytest.mark.parametrize("text, message", [
    ("[cavity]\ng_mhz = fast\n", "[cavity] g_mhz"),
    ("[grid]\nn_steps = 10.5\n", "[grid] n_steps"),
    ("[grid]\nn_steps = 1\n", "n_steps"),
    ("[sweep]\njobs = 0\n", "jobs"),
    ("[sweep]\nvalues = 1, x\n", "[sweep] values"),
    ("[simulate]\ninit = excited\n", "[simulate] init"),
    ("[derive]\nomega_max_mhz = -1\n", "omega_max_mhz"),
    ("[cavity]\nkappa_mhz = -3\n", "kappa"),
    ("[photon]\nshape = tabulated\n", "[photon] samples"),
])
def test_rejected(write_config, text, message) -> None:
    with pytest.raises(ConfigError) as info:
        load_config(write_config(text), Experiment.DERIVE)
    assert message in str(info.value)


def test_tabulated_samples_relative_to_config(write_config) -> None:
    samples = "".join(f"{t} {t * (9 - t)}\n" for t in range(10))
    write_config("# t_us amplitude\n" + samples, name="photon.csv")
    path = write_config("[photon]\nshape = tabulated\nsamples = photon.csv\n")
    config = load_config(path, Experiment.DERIVE)
    assert config.shape.kind is ShapeKind.TABULATED
    expected = path.parent.resolve() / "photon.csv"
    assert config.raw["photon"]["samples"] == str(expected)


def test_pulse_path_resolved(write_config) -> None:
    write_config("t_us,omega_mhz\n", name="pulse.csv")
    path = write_config("[simulate]\npulse = pulse.csv\n")
    config = load_config(path, Experiment.SIMULATE)
    assert config.pulse_path == path.parent.resolve() / "pulse.csv"


@pytest.mark.parametrize("text, value", [
    ("-0.7071", -0.7071),
    ("0.5+0.5j", 0.5 + 0.5j),
    ("0.6, -0.8", 0.6 - 0.8j),
    (" 1 ", 1),
])
def test_parse_amplitude(text, value) -> None:
    assert parse_amplitude(text) == value


def test_parse_amplitude_rejects() -> None:
    with pytest.raises(ConfigError):
        parse_amplitude("half")


def test_normalize_amplitudes() -> None:
    alpha, beta = normalize_amplitudes(0.7071, -0.7071)
    assert abs(alpha) ** 2 + abs(beta) ** 2 == pytest.approx(1, abs=1e-15)
    with pytest.raises(NormalizationError):
        normalize_amplitudes(1, 0.1)
