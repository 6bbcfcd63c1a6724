from __future__ import annotations

import json

import numpy as np
import pytest

from abstain.sdk.exceptions import ModelFileError
from abstain.sdk.models import load_model, save_model, train_cad_svm, train_svm
from abstain.sdk.qp import SolverStatus


def test_model_file_round_trip_is_exact(tmp_path, ternary_data) -> None:
    model = train_cad_svm(ternary_data, 1e-3, 1e-3, 1.0, c=0.2, d=0.2)
    loaded = load_model(save_model(model, tmp_path / "cad.model"))

    assert np.array_equal(loaded.w, model.w)
    assert np.array_equal(loaded.u, model.u)
    assert np.array_equal(loaded.basis.centers, model.basis.centers)
    assert loaded.basis.sigma == model.basis.sigma
    assert loaded.loss_params == model.loss_params
    assert loaded.hyperparameters == model.hyperparameters
    assert loaded.method == "cad-svm"
    assert loaded.status is SolverStatus.CONVERGED


def test_model_file_layout(tmp_path, separable_data) -> None:
    path = save_model(train_svm(separable_data, 1e-3, 1.0), tmp_path / "svm.model")
    document = json.loads(path.read_text())

    assert document["formatVersion"] == 1
    assert document["method"] == "svm"
    assert document["lossParams"] is None
    assert len(document["centers"]) == len(document["w"]) == 20


@pytest.mark.parametrize(
    "content",
    [
        "not json",
        "{}",
        '{"method": "svm", "sigma": 1.0, "centers": [[0.0]], "w": [1.0], "u": []}',
        '{"method": "svm", "sigma": -1.0, "centers": [[0.0]], "w": [1.0], "u": [0]}',
        '{"formatVersion": 9, "method": "svm", "sigma": 1.0, "centers": [[0.0]], '
        '"w": [1.0], "u": [0.0]}',
    ],
)
def test_invalid_model_files(tmp_path, content) -> None:
    path = tmp_path / "bad.model"
    path.write_text(content)

    with pytest.raises(ModelFileError):
        load_model(path)


def test_missing_model_file(tmp_path) -> None:
    with pytest.raises(ModelFileError):
        load_model(tmp_path / "absent.model")
