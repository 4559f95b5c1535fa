import json
import shutil
from pathlib import Path
from typing import Any, Callable

import pytest
from click.testing import CliRunner

from evpkit.tests.helpers import generators


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def flagship_file(tmp_path: Path) -> Path:
    target = tmp_path / "simplex_segment.json"
    shutil.copyfile(generators.FLAGSHIP, target)
    return target


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], Path]:
    def _write(name: str, payload: Any) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path

    return _write
