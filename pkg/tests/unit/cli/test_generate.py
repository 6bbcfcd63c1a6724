from __future__ import annotations

import pandas as pd

from abstain.cli import cli


def test_generate_toy_prints_region_counts(tmp_path, runner) -> None:
    output = tmp_path / "toy.csv"
    result = runner.invoke(cli, ["generate", "toy", "--seed", "1", "-o", str(output)])

    assert result.exit_code == 0, result.output
    assert "toy-r0.5: 400 samples" in result.output
    assert "separable: positive=100 negative=100 ambiguous=0" in result.output
    assert "mixed: positive=50 negative=50 ambiguous=100" in result.output

    frame = pd.read_csv(output)

    assert list(frame.columns) == ["x1", "x2", "label"]
    assert len(frame) == 400


def test_generate_toy_is_seeded(tmp_path, runner) -> None:
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]

    for path in paths:
        runner.invoke(cli, ["generate", "toy", "--seed", "4", "-o", str(path)])

    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_ratio_out_of_range(tmp_path, runner) -> None:
    result = runner.invoke(
        cli, ["generate", "toy", "--r", "1.5", "-o", str(tmp_path / "t.csv")]
    )

    assert result.exit_code == 1
    assert not (tmp_path / "t.csv").exists()


def test_housing_kinds_need_a_table(tmp_path, runner, monkeypatch) -> None:
    monkeypatch.delenv("ABSTAIN_HOUSING_CSV", raising=False)
    result = runner.invoke(cli, ["generate", "pd1", "-o", str(tmp_path / "pd1.csv")])

    assert result.exit_code == 1
    assert "--housing" in result.output


def test_missing_housing_table(tmp_path, runner) -> None:
    result = runner.invoke(
        cli,
        [
            "generate",
            "pd2",
            "--housing",
            str(tmp_path / "absent.csv"),
            "-o",
            str(tmp_path / "pd2.csv"),
        ],
    )

    assert result.exit_code == 2
    assert "Error:" in result.output
