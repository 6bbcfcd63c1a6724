from __future__ import annotations

import click
import pytest

from abstain.cli import cli
from abstain.cli.config import build_default_map, read_config_file
from abstain.sdk.models import load_model


def test_read_config_file(tmp_path) -> None:
    path = tmp_path / "abstain.cfg"
    path.write_text("# defaults\n\nseed = 5\ntrain.split-ratio=0.5\n")

    assert read_config_file(path) == [
        (None, "seed", "5"),
        ("train", "split_ratio", "0.5"),
    ]


def test_malformed_line(tmp_path) -> None:
    path = tmp_path / "abstain.cfg"
    path.write_text("seed\n")

    with pytest.raises(click.BadParameter, match="key=value"):
        read_config_file(path)


def test_default_map_scopes_keys() -> None:
    default_map = build_default_map(
        cli,
        [
            (None, "seed", "5"),
            (None, "log_level", "INFO"),
            ("train", "lambda", "0.01"),
            (None, "methods", "svm, cad-svm"),
        ],
    )

    assert default_map["log_level"] == "INFO"
    assert default_map["train"] == {"seed": "5", "lam": "0.01"}
    assert default_map["generate"] == {"seed": "5"}
    assert default_map["evaluate"]["methods"] == "svm, cad-svm"


@pytest.mark.parametrize(
    "entry", [(None, "gamma", "1"), ("fit", "seed", "1"), ("predict", "seed", "1")]
)
def test_unmatched_keys(entry) -> None:
    with pytest.raises(click.BadParameter):
        build_default_map(cli, [entry])


def test_config_supplies_defaults_and_flags_win(toy_csv, tmp_path, runner) -> None:
    config = tmp_path / "abstain.cfg"
    config.write_text("train.c = 0.3\nsigma = 0.5\n")
    from_config, from_flag = tmp_path / "a.model", tmp_path / "b.model"

    first = runner.invoke(
        cli,
        ["--config", str(config), "train", "cad-svm", str(toy_csv)]
        + ["-o", str(from_config)],
    )
    second = runner.invoke(
        cli,
        ["--config", str(config), "train", "cad-svm", str(toy_csv)]
        + ["--c", "0.1", "-o", str(from_flag)],
    )

    assert first.exit_code == 0, first.output
    assert second.exit_code == 0, second.output
    assert load_model(from_config).loss_params.c == 0.3
    assert load_model(from_config).basis.sigma == 0.5
    assert load_model(from_flag).loss_params.c == 0.1


def test_bad_config_key_is_a_usage_error(tmp_path, runner) -> None:
    config = tmp_path / "abstain.cfg"
    config.write_text("gamma=1\n")
    result = runner.invoke(cli, ["--config", str(config), "loss-curves", "-o", "x"])

    assert result.exit_code == 1
    assert "gamma" in result.output
