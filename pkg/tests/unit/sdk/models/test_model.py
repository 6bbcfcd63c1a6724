from __future__ import annotations

import numpy as np
import pytest

from abstain.sdk.datasets import Dataset
from abstain.sdk.exceptions import InvalidTrainingDataError, KernelDimensionError
from abstain.sdk.kernels import BasisSet
from abstain.sdk.models import (
    TrainedModel,
    binary_accuracy,
    predict,
    predict_batch,
    predict_labels,
    train_cad_svm,
)


@pytest.fixture
def cad_model(ternary_data) -> TrainedModel:
    return train_cad_svm(ternary_data, 1e-3, 1e-3, 1.0, c=0.2, d=0.2)


def test_zero_classifier_predicts_negative() -> None:
    basis = BasisSet(centers=np.zeros((3, 2)), sigma=1.0)
    model = TrainedModel(basis=basis, w=np.zeros(3), u=np.zeros(3), method="svm")
    prediction = predict(model, [0.3, -0.7])

    assert prediction.label == -1
    assert prediction.h_value == 0.0
    assert prediction.rejected


def test_equal_coefficients_give_equal_values() -> None:
    basis = BasisSet(centers=np.array([[1.0]]), sigma=0.7)
    model = TrainedModel(basis=basis, w=[0.4], u=[0.4], method="cad-svm")
    prediction = predict(model, [0.2])

    assert prediction.h_value == prediction.r_value
    assert prediction.label == 1 and not prediction.rejected


def test_batch_matches_pointwise(cad_model) -> None:
    points = np.random.default_rng(0).uniform(-3, 3, size=(100, 2))
    batch = predict_batch(cad_model, points)
    pointwise = [predict(cad_model, point) for point in points]

    assert [(p.label, p.rejected) for p in batch] == [
        (p.label, p.rejected) for p in pointwise
    ]
    np.testing.assert_allclose(
        [(p.h_value, p.r_value) for p in batch],
        [(p.h_value, p.r_value) for p in pointwise],
        rtol=1e-12,
        atol=1e-14,
    )
    np.testing.assert_array_equal(
        predict_labels(cad_model, points), [p.label for p in batch]
    )


def test_accuracy_never_reads_the_rejector(cad_model, ternary_data) -> None:
    assert binary_accuracy(cad_model, ternary_data) == binary_accuracy(
        cad_model.without_rejector(), ternary_data
    )
    assert not cad_model.without_rejector().has_rejector


def test_dimension_mismatch(cad_model) -> None:
    with pytest.raises(KernelDimensionError):
        predict(cad_model, [1.0, 2.0, 3.0])


@pytest.mark.parametrize(
    ("w", "u"),
    [([1.0, 2.0], [0.0]), ([1.0], [0.0, 0.0]), ([np.nan], [0.0]), ([1.0], [np.inf])],
)
def test_invalid_coefficients(w, u) -> None:
    basis = BasisSet(centers=np.zeros((1, 1)), sigma=1.0)

    with pytest.raises(InvalidTrainingDataError):
        TrainedModel(basis=basis, w=w, u=u, method="svm")


def test_coefficients_are_read_only(cad_model) -> None:
    with pytest.raises(ValueError):
        cad_model.w[0] = 1.0


def test_accuracy_needs_labeled_samples(cad_model) -> None:
    only_ambiguous = Dataset(features=np.zeros((2, 2)), labels=[0, 0])

    with pytest.raises(InvalidTrainingDataError):
        binary_accuracy(cad_model, only_ambiguous)
