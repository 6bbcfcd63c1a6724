"""Training and test risks of a fitted model."""
from __future__ import annotations

import numpy as np
from sklearn.metrics import accuracy_score

from abstain.sdk.datasets import Dataset
from abstain.sdk.exceptions import InvalidTrainingDataError
from abstain.sdk.losses import LossParams, loss_01cd, loss_hinge, loss_mh, loss_mha

from .model import TrainedModel, predict_labels
from .trainers import CAD_SVM, CRO_SVM, CRO_SVM_RL


def binary_accuracy(model: TrainedModel, data: Dataset) -> float:
    """Accuracy of ``sign(h)`` on the positive and negative samples only.

    Ambiguous samples never enter the score and the rejector is never read.

    Raises:
        InvalidTrainingDataError: If the data holds no positive or negative sample.
    """
    mask = data.binary_mask

    if not np.any(mask):
        raise InvalidTrainingDataError(
            f"Cannot score {data.name!r}: it has no positive or negative samples."
        )

    y_pred = predict_labels(model, data.features[mask])

    return float(accuracy_score(y_true=data.labels[mask], y_pred=y_pred))


def empirical_surrogate_risk(model: TrainedModel, data: Dataset) -> float:
    """Mean training surrogate of the model's method family.

    CAD-SVM models are scored with the MHA loss over every sample, CRO-SVM models
    with the max-hinge loss and every other method with the hinge loss, the
    latter two over the positive and negative samples.
    """
    values = model.decision_values(data.features)
    h, r = values[:, 0], values[:, 1]
    family = model.method.split("+")[0]

    if family == CAD_SVM:
        return float(np.mean(loss_mha(h, r, data.labels, _require_params(model))))

    mask = data.binary_mask
    y = data.labels[mask]

    if family in (CRO_SVM, CRO_SVM_RL):
        params = _require_params(model)

        return float(np.mean(loss_mh(h[mask], r[mask], y, params)))

    return float(np.mean(loss_hinge(h[mask], y)))


def empirical_01cd_risk(
    model: TrainedModel, data: Dataset, c: float, d: float
) -> float:
    """Mean 0-1-c-d loss of ``(h, r)`` over every sample."""
    values = model.decision_values(data.features)
    params = LossParams(c=c, d=d, alpha=1.0, beta=1.0)

    return float(np.mean(loss_01cd(values[:, 0], values[:, 1], data.labels, params)))


def _require_params(model: TrainedModel) -> LossParams:
    if model.loss_params is None:
        raise InvalidTrainingDataError(
            f"A {model.method!r} model must carry its loss parameters."
        )

    return model.loss_params
