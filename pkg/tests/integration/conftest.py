from __future__ import annotations

import logging
import os
from pathlib import Path

import pytest
from click.testing import CliRunner

from abstain.cli import app

HOUSING_ENV_VAR = "ABSTAIN_HOUSING_CSV"


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(autouse=True)
def detach_cli_handlers():
    yield
    root = logging.getLogger()

    while app._HANDLERS:
        root.removeHandler(app._HANDLERS.pop())


@pytest.fixture
def housing_csv() -> Path:
    path = os.getenv(HOUSING_ENV_VAR)

    if not path or not Path(path).is_file():
        pytest.skip(f"Set {HOUSING_ENV_VAR} to the housing table to run this test.")

    return Path(path)
