"""
Run configuration.

INI file with one section per concern, in MHz and microseconds::

    [cavity]
    g_mhz = 15
    kappa_mhz = 3
    gamma_mhz = 3
    rho0 = 0.005

    [photon]
    shape = sin2
    tau_us = 3.14

Every key has a default, so an empty file describes the reference setup.
"""
import configparser
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from cavity_memory.api.entities import (
    CavityParams, DEFAULT_N_STEPS, DEFAULT_PARAMS_MHZ, DEFAULT_RHO0,
)
from cavity_memory.api.entities.units import mhz_to_rad, us_to_s
from cavity_memory.api.exceptions import (
    CavityMemoryError, ConfigError, NormalizationError,
)
from cavity_memory.shapes import load_samples, ShapeKind, ShapeSpec

# accepted deviation of |alpha|^2 + |beta|^2 from one before renormalizing
AMPLITUDE_TOLERANCE = 1e-3


class Experiment(Enum):
    DERIVE = "derive"
    SIMULATE = "simulate"
    SWEEP = "sweep"
    TIMEBIN = "timebin"


class InitMode(Enum):
    MATCHED = "matched"
    GROUND = "ground"
    EMPTY = "empty"


class SweepAxis(Enum):
    RHO0 = "rho0"
    COOPERATIVITY = "cooperativity"


@dataclass(frozen=True)
class RunConfig:
    params: CavityParams
    shape: ShapeSpec
    experiment: Experiment
    n_steps: int = DEFAULT_N_STEPS
    out: Optional[Path] = None
    omega_max: Optional[float] = None
    init: InitMode = InitMode.MATCHED
    pulse_path: Optional[Path] = None
    sweep_axis: SweepAxis = SweepAxis.COOPERATIVITY
    sweep_values: Tuple[float, ...] = ()
    jobs: int = 1
    alpha: complex = 2 ** -0.5
    beta: complex = -2 ** -0.5
    gap: float = us_to_s(0.5)
    raw: Dict[str, Dict[str, str]] = field(default_factory=dict)

    def sections(self) -> List[Tuple[str, List[Tuple[str, str]]]]:
        """Every key read, defaults included, sorted by section and key."""
        return [
            (section, sorted(values.items()))
            for section, values in sorted(self.raw.items())
        ]

    def parameter_rows(self) -> List[Tuple[str, str]]:
        """Flattened ``section.key`` pairs, for provenance headers."""
        return [
            (f"{section}.{key}", value)
            for section, values in self.sections()
            for key, value in values
        ]


def parse_amplitude(text: str) -> complex:
    """Accept ``-0.7071``, ``0.5+0.5j`` or a ``re,im`` pair."""
    text = text.strip().replace(" ", "")
    try:
        if "," in text:
            re, im = text.split(",")
            return complex(float(re), float(im))
        return complex(text)
    except ValueError as e:
        raise ConfigError(f"Cannot parse amplitude `{text}`") from e


def normalize_amplitudes(
        alpha: complex, beta: complex,
) -> Tuple[complex, complex]:
    norm2 = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(norm2 - 1) > AMPLITUDE_TOLERANCE:
        raise NormalizationError(
            f"|alpha|^2 + |beta|^2 must be 1, got {norm2:.6g}",
        )
    norm = norm2 ** 0.5
    return alpha / norm, beta / norm


class _Reader:
    def __init__(self, parser: configparser.ConfigParser):
        self.parser = parser
        self.used: Dict[str, Dict[str, str]] = {}

    def _get(self, section: str, key: str, default: Any) -> Optional[str]:
        if self.parser.has_option(section, key):
            value = self.parser.get(section, key)
        elif default is None:
            return None
        else:
            value = str(default)
        self.used.setdefault(section, {})[key] = value
        return value

    def text(self, section: str, key: str, default: Any = None):
        return self._get(section, key, default)

    def number(self, section: str, key: str, default: Any = None):
        value = self._get(section, key, default)
        if value is None:
            return None
        try:
            return float(value)
        except ValueError as e:
            raise ConfigError(
                f"[{section}] {key}: expected a number, got `{value}`",
            ) from e

    def integer(self, section: str, key: str, default: Any = None):
        value = self.number(section, key, default)
        if value is None:
            return None
        if value != int(value):
            raise ConfigError(
                f"[{section}] {key}: expected an integer, got `{value}`",
            )
        return int(value)

    def numbers(self, section: str, key: str) -> Tuple[float, ...]:
        value = self._get(section, key, "")
        try:
            return tuple(
                float(item) for item in value.split(",") if item.strip()
            )
        except ValueError as e:
            raise ConfigError(
                f"[{section}] {key}: expected a comma separated list, "
                f"got `{value}`",
            ) from e

    def choice(self, section: str, key: str, enum, default):
        value = self._get(section, key, default.value)
        try:
            return enum(value.strip().lower())
        except ValueError as e:
            allowed = ", ".join(item.value for item in enum)
            raise ConfigError(
                f"[{section}] {key}: expected one of {allowed}, "
                f"got `{value}`",
            ) from e


def _read_shape(reader: _Reader, base_dir: Path) -> ShapeSpec:
    kind = reader.choice("photon", "shape", ShapeKind, ShapeKind.SIN2)
    if kind is ShapeKind.TABULATED:
        samples = reader.text("photon", "samples")
        if not samples:
            raise ConfigError("[photon] samples: path required for tabulated")
        path = base_dir / samples
        reader.used["photon"]["samples"] = str(path)
        if not path.exists():
            raise ConfigError(f"[photon] samples: file {path} not found")
        return load_samples(path)
    tau = reader.number("photon", "tau_us", 3.14)
    return ShapeSpec(kind=kind, tau_photon=us_to_s(tau))


def _read_params(reader: _Reader) -> CavityParams:
    g, kappa, gamma = DEFAULT_PARAMS_MHZ
    return CavityParams.from_mhz(
        g_mhz=reader.number("cavity", "g_mhz", g),
        kappa_mhz=reader.number("cavity", "kappa_mhz", kappa),
        gamma_mhz=reader.number("cavity", "gamma_mhz", gamma),
        rho0=reader.number("cavity", "rho0", DEFAULT_RHO0),
    )


def load_config(
        path: Optional[Union[str, Path]],
        experiment: Experiment,
        overrides: Optional[Mapping[str, Optional[str]]] = None,
        out: Optional[Path] = None,
) -> RunConfig:
    """
    Read an INI config, apply overrides and validate.

    :param path: INI file, ``None`` for all defaults
    :param experiment: subcommand the config is used for
    :param overrides: values by ``section.key`` taking precedence over
        the file, ``None`` values are ignored
    :param out: main output file
    """
    parser = configparser.ConfigParser()
    base_dir = Path.cwd()
    if path is not None:
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"Config file {path} not found")
        try:
            parser.read(path, encoding="utf-8")
        except configparser.Error as e:
            raise ConfigError(f"Cannot parse {path}: {e}") from e
        base_dir = path.parent.resolve()
    for name, value in (overrides or {}).items():
        if value is None:
            continue
        section, key = name.split(".")
        if not parser.has_section(section):
            parser.add_section(section)
        parser.set(section, key, str(value))
    reader = _Reader(parser)

    omega_max = reader.number("derive", "omega_max_mhz")
    pulse = reader.text("simulate", "pulse")
    if pulse is not None:
        pulse = base_dir / pulse
        reader.used["simulate"]["pulse"] = str(pulse)
    gap = reader.number("timebin", "gap_us", 0.5)
    try:
        config = RunConfig(
            params=_read_params(reader),
            shape=_read_shape(reader, base_dir),
            experiment=experiment,
            n_steps=reader.integer("grid", "n_steps", DEFAULT_N_STEPS),
            out=out,
            omega_max=None if omega_max is None else mhz_to_rad(omega_max),
            init=reader.choice(
                "simulate", "init", InitMode, InitMode.MATCHED,
            ),
            pulse_path=pulse,
            sweep_axis=reader.choice(
                "sweep", "axis", SweepAxis, SweepAxis.COOPERATIVITY,
            ),
            sweep_values=reader.numbers("sweep", "values"),
            jobs=reader.integer("sweep", "jobs", 1),
            alpha=parse_amplitude(reader.text("timebin", "alpha", "0.7071")),
            beta=parse_amplitude(reader.text("timebin", "beta", "-0.7071")),
            gap=us_to_s(gap),
            raw=reader.used,
        )
    except ConfigError:
        raise
    except CavityMemoryError as e:
        raise ConfigError(f"Invalid configuration: {e}") from e
    _validate(config)
    return config


def _validate(config: RunConfig) -> None:
    if config.n_steps < 2:
        raise ConfigError(f"n_steps must be at least 2, got {config.n_steps}")
    if config.jobs < 1:
        raise ConfigError(f"jobs must be at least 1, got {config.jobs}")
    if config.omega_max is not None and config.omega_max <= 0:
        raise ConfigError("[derive] omega_max_mhz must be positive")
    if config.gap < 0:
        raise ConfigError("[timebin] gap_us must not be negative")
    if config.pulse_path is not None and not config.pulse_path.exists():
        raise ConfigError(f"Pulse file {config.pulse_path} not found")
