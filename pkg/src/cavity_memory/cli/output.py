"""
Result files.

CSV tables start with a ``#`` provenance header rendered from a template,
followed by one header row and the data. Floats are written with 17
significant digits in CSV and JSON alike so runs can be diffed.
"""
import csv
import json
import math
import re
from functools import lru_cache
from logging import getLogger
from pathlib import Path
from typing import (
    Any, Iterable, List, Optional, Sequence, TextIO, Tuple, Union,
)

import numpy as np
from jinja2 import Environment, PackageLoader

from cavity_memory.api.entities import ControlPulse, TimeGrid
from cavity_memory.api.entities.units import mhz_to_rad, s_to_us, us_to_s
from cavity_memory.api.exceptions import GridMismatchError, PulseFileError

logger = getLogger(__name__)

FLOAT_FORMAT = ".17g"
# allowed deviation of a pulse file time column from the expected grid, μs
TIME_TOLERANCE_US = 1e-9

_FLOAT_MARK = "\x00f:"
_FLOAT_RE = re.compile(r'"\\u0000f:([^"]*)"')

Cell = Union[str, float, int, bool, None]


def format_float(value: float) -> str:
    return format(float(value), FLOAT_FORMAT)


def format_cell(value: Cell) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    return format_float(value)


@lru_cache(maxsize=1)
def _env() -> Environment:
    return Environment(
        loader=PackageLoader("cavity_memory.cli"),
        autoescape=False,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )


def render_header(
        version: str,
        command: str,
        parameters: Sequence[Tuple[str, str]],
        notes: Sequence[str] = (),
) -> str:
    template = _env().get_template("header.txt.j2")
    return template.render(
        version=version,
        command=command,
        parameters=parameters,
        notes=notes,
    )


def render_manifest(
        version: str,
        command: str,
        sections: Sequence[Tuple[str, Sequence[Tuple[str, str]]]],
        residuals: Sequence[Tuple[str, float]],
) -> str:
    template = _env().get_template("manifest.ini.j2")
    return template.render(
        version=version,
        command=command,
        sections=sections,
        residuals=[(name, format_float(v)) for name, v in residuals],
    )


def write_csv(
        stream: TextIO,
        header: str,
        columns: Sequence[str],
        rows: Iterable[Sequence[Cell]],
) -> None:
    stream.write(header)
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(cell) for cell in row])


def _mark_floats(data: Any) -> Any:
    if isinstance(data, dict):
        return {str(k): _mark_floats(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_mark_floats(v) for v in data]
    if isinstance(data, (bool, np.bool_)):
        return bool(data)
    if isinstance(data, (int, np.integer)):
        return int(data)
    if isinstance(data, (float, np.floating)):
        if not math.isfinite(data):
            return None
        return _FLOAT_MARK + format_float(data)
    return data


def dumps_json(data: Any) -> str:
    """Serialize with sorted keys and 17-digit floats, non-finite as null."""
    text = json.dumps(_mark_floats(data), sort_keys=True, indent=2)
    return _FLOAT_RE.sub(r"\1", text) + "\n"


def write_json(stream: TextIO, data: Any) -> None:
    stream.write(dumps_json(data))


def complex_matrix(matrix: np.ndarray) -> List[List[dict]]:
    return [
        [{"re": float(z.real), "im": float(z.imag)} for z in row]
        for row in np.asarray(matrix, dtype=complex)
    ]


def pulse_rows(
        pulse: ControlPulse, columns: Sequence[np.ndarray],
) -> Iterable[Sequence[float]]:
    t_us = s_to_us(pulse.grid.times())
    return zip(t_us, *columns)


def read_pulse_csv(
        path: Union[str, Path], grid: Optional[TimeGrid] = None,
) -> ControlPulse:
    """
    Read a pulse written by ``derive``.

    Needs the ``t_us`` and ``omega_mhz`` columns, other columns are
    ignored. The time column must match `grid` (built from the file itself
    if omitted) point by point.
    """
    path = Path(path)
    try:
        with path.open(newline="", encoding="utf-8") as f:
            lines = [line for line in f if not line.startswith("#")]
    except OSError as e:
        raise PulseFileError(f"Cannot read {path}: {e}") from e
    reader = csv.DictReader(lines)
    fields = reader.fieldnames or []
    for column in ("t_us", "omega_mhz"):
        if column not in fields:
            raise PulseFileError(
                f"Missing column in {path}", column=column,
            )
    times, omega = [], []
    for row_no, row in enumerate(reader, start=1):
        for column, target in (("t_us", times), ("omega_mhz", omega)):
            text = row.get(column)
            try:
                value = float(text)
            except (TypeError, ValueError):
                raise PulseFileError(
                    f"not a number `{text}`", row=row_no, column=column,
                ) from None
            if not math.isfinite(value):
                raise PulseFileError(
                    f"not finite `{text}`", row=row_no, column=column,
                )
            target.append(value)
    if len(times) < 3:
        raise PulseFileError(f"Pulse file {path} has fewer than 3 rows")
    times = np.array(times)
    if grid is None:
        grid = TimeGrid(
            t_start=us_to_s(times[0]),
            t_stop=us_to_s(times[-1]),
            n_steps=len(times) - 1,
        )
    if len(times) != len(grid):
        raise GridMismatchError(
            f"Pulse file has {len(times)} samples, grid needs {len(grid)}",
        )
    expected = s_to_us(grid.times())
    deviation = np.abs(times - expected)
    if np.any(deviation > TIME_TOLERANCE_US * np.maximum(1, np.abs(expected))):
        k = int(np.argmax(deviation))
        raise GridMismatchError(
            f"Pulse time {times[k]!r} μs at row {k + 1} does not match "
            f"grid time {expected[k]!r} μs",
        )
    logger.debug("Read %s pulse samples from %s", len(times), path)
    return ControlPulse(grid=grid, omega=mhz_to_rad(np.array(omega)))
