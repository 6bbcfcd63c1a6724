from __future__ import annotations

import numpy as np
import pandas as pd

from abstain.cli import cli


def test_project_2d(toy_csv, tmp_path, runner) -> None:
    output = tmp_path / "projected.csv"
    result = runner.invoke(cli, ["project-2d", str(toy_csv), "-o", str(output)])
    frame = pd.read_csv(output)

    assert result.exit_code == 0, result.output
    assert list(frame.columns) == ["x", "y", "label"]
    assert len(frame) == 60
    assert np.isclose(frame["x"].mean(), 0.0)


def test_loss_curves(tmp_path, runner) -> None:
    output = tmp_path / "curves.csv"
    result = runner.invoke(
        cli, ["loss-curves", "--c", "0.2", "--points", "5", "-o", str(output)]
    )
    frame = pd.read_csv(output)

    assert result.exit_code == 0, result.output
    assert "alpha=1.2 beta=1.4 eta=1.42857, 75 rows" in result.output
    assert list(frame.columns) == ["y", "h", "r", "l01cd", "lmha"]
    assert (frame["lmha"] >= frame["l01cd"]).all()


def test_decision_map(cad_model_file, tmp_path, runner) -> None:
    output = tmp_path / "map.csv"
    result = runner.invoke(
        cli,
        ["decision-map", str(cad_model_file), "--resolution", "11", "-o", str(output)],
    )
    frame = pd.read_csv(output)

    assert result.exit_code == 0, result.output
    assert len(frame) == 121
    assert frame["x1"].min() == 0.0 and frame["x2"].max() == 1.0
    assert ((frame["r"] <= 0) == (frame["rejected"] == 1)).all()


def test_decision_map_needs_a_planar_model(tmp_path, runner) -> None:
    data = tmp_path / "three.csv"
    rows = ["x1,x2,x3,label"] + [
        f"{i},{i % 3},{i % 5},{1 if i % 2 else -1}" for i in range(12)
    ]
    data.write_text("\n".join(rows) + "\n")
    model = tmp_path / "svm.model"
    trained = runner.invoke(cli, ["train", "svm", str(data), "-o", str(model)])
    result = runner.invoke(
        cli, ["decision-map", str(model), "-o", str(tmp_path / "map.csv")]
    )

    assert trained.exit_code == 0, trained.output
    assert result.exit_code == 2
    assert "2 features" in result.output
