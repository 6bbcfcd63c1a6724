from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional

import numpy as np
import numpy.typing as npt

from abstain.sdk.exceptions import InvalidTrainingDataError
from abstain.sdk.kernels import BasisSet, design_matrix
from abstain.sdk.losses import LossParams
from abstain.sdk.qp import SolverStatus


class Prediction(NamedTuple):
    """A test-phase output. ``rejected`` is a diagnostic and never enters accuracy."""

    h_value: float
    r_value: float
    label: int
    rejected: bool


@dataclass(frozen=True)
class TrainedModel:
    """The learned discriminant ``h(x) = sum_j w_j phi_j(x)`` and rejector ``r``.

    Attributes:
        basis: The Gaussian basis the coefficients refer to.
        w: Classifier coefficients, one per basis center.
        u: Rejector coefficients, all zero for methods without a rejector.
        method: The method tag that produced the model.
        loss_params: The 0-1-c-d penalties and surrogate shape, if the method has
            them.
        hyperparameters: The hyperparameters the trainer was called with.
        objective: The optimal value of the final training program.
        status: The solver status of the final training program.
    """

    basis: BasisSet
    w: np.ndarray
    u: np.ndarray
    method: str
    loss_params: Optional[LossParams] = None
    hyperparameters: Dict[str, float] = field(default_factory=dict)
    objective: float = float("nan")
    status: SolverStatus = SolverStatus.CONVERGED

    def __post_init__(self) -> None:
        w = np.array(self.w, dtype=float, copy=True).reshape(-1)
        u = np.array(self.u, dtype=float, copy=True).reshape(-1)

        if w.shape[0] != self.basis.size or u.shape[0] != self.basis.size:
            raise InvalidTrainingDataError(
                f"Coefficient lengths (w={w.shape[0]}, u={u.shape[0]}) must equal the "
                f"basis size {self.basis.size}."
            )

        if not (np.all(np.isfinite(w)) and np.all(np.isfinite(u))):
            raise InvalidTrainingDataError("Model coefficients must be finite.")

        w.setflags(write=False)
        u.setflags(write=False)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "hyperparameters", dict(self.hyperparameters))
        object.__setattr__(self, "status", SolverStatus(self.status))

    @property
    def has_rejector(self) -> bool:
        return bool(np.any(self.u != 0.0))

    def decision_values(self, points: npt.ArrayLike) -> np.ndarray:
        """Returns the ``(M, 2)`` matrix of ``(h, r)`` values at the points."""
        K = design_matrix(self.basis, points)

        return np.column_stack([K @ self.w, K @ self.u])

    def without_rejector(self) -> "TrainedModel":
        return TrainedModel(
            basis=self.basis,
            w=self.w,
            u=np.zeros_like(self.u),
            method=self.method,
            loss_params=self.loss_params,
            hyperparameters=self.hyperparameters,
            objective=self.objective,
            status=self.status,
        )


def predict(model: TrainedModel, x: npt.ArrayLike) -> Prediction:
    """Classifies one point by ``sign(h)``, mapping ``h = 0`` to ``-1``."""
    point = np.asarray(x, dtype=float).reshape(1, -1)

    return predict_batch(model, point)[0]


def predict_batch(model: TrainedModel, points: npt.ArrayLike) -> List[Prediction]:
    values = model.decision_values(points)

    return [
        Prediction(
            h_value=float(h),
            r_value=float(r),
            label=1 if h > 0 else -1,
            rejected=bool(r <= 0),
        )
        for h, r in values
    ]


def predict_labels(model: TrainedModel, points: npt.ArrayLike) -> np.ndarray:
    """Vectorized labels of :py:func:`predict`, read from ``h`` only."""
    h = design_matrix(model.basis, points) @ model.w

    return np.where(h > 0, 1, -1)
