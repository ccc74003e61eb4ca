__all__ = [
    "RunConfig",
    "load_config",
    "read_pulse_csv",
]

from .config import load_config, RunConfig
from .output import read_pulse_csv
