from __future__ import annotations

import logging

import pytest
from click.testing import CliRunner

from abstain.cli import app


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
def toy_csv(tmp_path, runner):
    path = tmp_path / "toy.csv"
    result = runner.invoke(
        app.cli, ["generate", "toy", "--total", "60", "--seed", "2", "-o", str(path)]
    )
    assert result.exit_code == 0, result.output

    return path


@pytest.fixture
def cad_model_file(tmp_path, runner, toy_csv):
    path = tmp_path / "cad.model"
    result = runner.invoke(
        app.cli,
        [
            "train",
            "cad-svm",
            str(toy_csv),
            "--lambda",
            "1e-3",
            "--lambda-prime",
            "1e-3",
            "--sigma",
            "0.5",
            "-o",
            str(path),
        ],
    )
    assert result.exit_code == 0, result.output

    return path
