import json
from pathlib import Path
from typing import Callable

import pytest


@pytest.fixture()
def write_config(tmp_path) -> Callable[..., Path]:
    def write(text: str, name: str = "run.ini") -> Path:
        path = tmp_path / name
        path.write_text(text)
        return path
    return write


@pytest.fixture()
def stdout_json(capsys) -> Callable[[], dict]:
    def read() -> dict:
        return json.loads(capsys.readouterr().out)
    return read
