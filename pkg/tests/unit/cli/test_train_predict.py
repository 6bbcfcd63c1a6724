from __future__ import annotations

import pandas as pd
import pytest

from abstain.cli import cli
from abstain.sdk.models import load_model


def test_train_cad_svm_uses_calibrated_shape(cad_model_file) -> None:
    model = load_model(cad_model_file)

    assert model.method == "cad-svm"
    assert model.loss_params.alpha == pytest.approx(1.2)
    assert model.loss_params.beta == pytest.approx(1.4)
    assert model.loss_params.eta == pytest.approx(1 / 0.7)
    assert model.hyperparameters["sigma"] == 0.5


def test_train_report_lines(toy_csv, tmp_path, runner) -> None:
    result = runner.invoke(
        cli,
        ["train", "cad-svm", str(toy_csv), "--sigma", "0.5", "-o", str(tmp_path / "m")],
    )

    assert result.exit_code == 0, result.output
    assert "loss parameters: c=0.2 d=0.2 alpha=1.2 beta=1.4 eta=1.42857" in (
        result.output
    )
    assert "training surrogate risk:" in result.output
    assert "training 0-1-c-d risk:" in result.output
    assert "training accuracy:" in result.output


def test_shape_overrides(toy_csv, tmp_path, runner) -> None:
    path = tmp_path / "m"
    result = runner.invoke(
        cli,
        ["train", "cad-svm", str(toy_csv), "--eta", "1", "-o", str(path)],
    )

    assert result.exit_code == 0, result.output
    assert load_model(path).loss_params.eta == 1.0


def test_unknown_method(toy_csv, tmp_path, runner) -> None:
    result = runner.invoke(
        cli, ["train", "bogus", str(toy_csv), "-o", str(tmp_path / "m")]
    )

    assert result.exit_code == 1
    assert "cad-svm" in result.output and "two-step-svm" in result.output


def test_missing_dataset(tmp_path, runner) -> None:
    result = runner.invoke(
        cli, ["train", "svm", str(tmp_path / "absent.csv"), "-o", str(tmp_path / "m")]
    )

    assert result.exit_code == 2
    assert "does not exist" in result.output


def test_train_with_cross_validation(toy_csv, tmp_path, runner) -> None:
    result = runner.invoke(
        cli,
        [
            "train",
            "svm",
            str(toy_csv),
            "--cv",
            "--lambda",
            "1e-3",
            "--folds",
            "3",
            "-o",
            str(tmp_path / "m"),
        ],
    )

    assert result.exit_code == 0, result.output
    assert load_model(tmp_path / "m").hyperparameters["lam"] == 1e-3


def test_predict_writes_one_row_per_sample(
    cad_model_file, toy_csv, tmp_path, runner
) -> None:
    output = tmp_path / "predictions.csv"
    result = runner.invoke(
        cli, ["predict", str(cad_model_file), str(toy_csv), "-o", str(output)]
    )
    frame = pd.read_csv(output)

    assert result.exit_code == 0, result.output
    assert list(frame.columns) == [
        "x1",
        "x2",
        "label",
        "h",
        "r",
        "prediction",
        "rejected",
    ]
    assert len(frame) == 60
    assert set(frame["prediction"]) <= {-1, 1}
    assert f"rejected: {int(frame['rejected'].sum())} of 60" in result.output


def test_predict_dimension_mismatch(cad_model_file, tmp_path, runner) -> None:
    data = tmp_path / "three.csv"
    data.write_text("x1,x2,x3,label\n0,0,0,1\n1,1,1,-1\n")
    result = runner.invoke(
        cli, ["predict", str(cad_model_file), str(data), "-o", str(tmp_path / "p")]
    )

    assert result.exit_code == 2
