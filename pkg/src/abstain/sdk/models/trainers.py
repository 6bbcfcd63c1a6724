"""Kernel trainers for positive, negative and ambiguous samples.

Every trainer expands the inputs in a Gaussian basis centered on the training
points, transcribes its loss into slack rows, and solves one convex program
(two for the two-step method). None of the models carries an intercept.
"""
from __future__ import annotations

from typing import Dict, Optional, Tuple

import numpy as np
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.datasets import Dataset
from abstain.sdk.exceptions import InvalidTrainingDataError, NumericalFailureError
from abstain.sdk.kernels import BasisSet, design_matrix, graph_laplacian
from abstain.sdk.losses import LossParams, calibrated_params
from abstain.sdk.qp import (
    QpProblem,
    QpSolution,
    SolverStatus,
    assemble_training_qp,
    solve_qp,
)
from abstain.sdk.utilities.random import init_rng

from ._constraints import hinge_rows, max_hinge_rows
from .model import TrainedModel

LOGGER: BoundLogger = structlog.stdlib.get_logger()

SVM = "svm"
SVM_RL = "svm-rl"
LAPSVM = "lapsvm"
TWO_STEP_SVM = "two-step-svm"
CRO_SVM = "cro-svm"
CRO_SVM_RL = "cro-svm-rl"
CAD_SVM = "cad-svm"
FALLBACK_SUFFIX = "+fallback"


def train_svm(data: Dataset, lam: float, sigma: float) -> TrainedModel:
    """Minimizes ``lam/2 |w|^2 + 1/N sum_i max(1 - y_i h_i, 0)``.

    Raises:
        InvalidTrainingDataError: If the data holds an ambiguous label or lacks a
            class.
    """
    _require_positive(lam=lam)

    if np.any(data.labels == 0):
        raise InvalidTrainingDataError(
            f"The SVM trainer accepts only positive and negative labels, but "
            f"{data.name!r} has {data.counts().ambiguous} ambiguous samples."
        )

    _require_both_classes(data, SVM)
    basis = BasisSet(centers=data.features, sigma=sigma)
    K = design_matrix(basis, data.features)
    problem = assemble_training_qp(K, hinge_rows(data.labels), n_u=0, lam=lam)
    solution = _solve(problem, SVM)

    return TrainedModel(
        basis=basis,
        w=solution.z[: basis.size],
        u=np.zeros(basis.size),
        method=SVM,
        hyperparameters=dict(lam=lam, sigma=sigma),
        objective=solution.objective,
        status=solution.status,
    )


def train_svm_rl(data: Dataset, lam: float, sigma: float, seed: int) -> TrainedModel:
    """Relabels ambiguous samples at random, then trains an SVM."""
    relabeled = relabel_ambiguous(data, seed)
    model = train_svm(relabeled, lam=lam, sigma=sigma)

    return _retag(model, SVM_RL, dict(lam=lam, sigma=sigma, seed=float(seed)))


def train_lapsvm(
    data: Dataset,
    lam: float,
    sigma: float,
    sigma_prime: float,
    tau: float,
) -> TrainedModel:
    """Laplacian-regularized SVM treating ambiguous samples as unlabeled.

    Minimizes ``lam/2 |w|^2 + tau f'Lf + 1/N_l sum_labeled max(1 - y_i h_i, 0)``
    where ``f = K w`` holds ``h`` at every sample and ``L`` is the graph Laplacian
    over every sample. The hinge average runs over labeled samples only.
    """
    _require_positive(lam=lam)

    if tau < 0:
        raise InvalidTrainingDataError(
            f"The Laplacian weight tau must be nonnegative, got {tau!r}."
        )

    _require_both_classes(data, LAPSVM)
    basis = BasisSet(centers=data.features, sigma=sigma)
    K = design_matrix(basis, data.features)
    labeled = data.binary_mask
    laplacian_penalty = np.zeros((basis.size, basis.size))

    if tau > 0:
        L = graph_laplacian(data.features, sigma_prime).L
        laplacian_penalty = 2.0 * tau * (K.T @ L @ K)

    problem = assemble_training_qp(
        K[labeled],
        hinge_rows(data.labels[labeled]),
        n_u=0,
        lam=lam,
        w_quadratic=laplacian_penalty,
    )
    solution = _solve(problem, LAPSVM)

    return TrainedModel(
        basis=basis,
        w=solution.z[: basis.size],
        u=np.zeros(basis.size),
        method=LAPSVM,
        hyperparameters=dict(
            lam=lam, sigma=sigma, sigma_prime=sigma_prime, tau=tau
        ),
        objective=solution.objective,
        status=solution.status,
    )


def train_two_step(
    data: Dataset,
    lam: float,
    lam_prime: float,
    sigma: float,
    c: float,
    d: float,
) -> TrainedModel:
    """Learns a rejector, then a classifier on the samples it accepts.

    The rejector is a binary SVM separating positive and negative samples
    (target ``+1``, slack weight ``c/N``) from ambiguous ones (target ``-1``, slack
    weight ``d/N``) with regularization ``lam_prime``. The classifier is an SVM on
    the positive and negative samples with ``r > 0``; when those lack a class it
    is trained on every positive and negative sample instead, and the method tag
    gains a ``+fallback`` suffix.
    """
    _require_positive(lam=lam, lam_prime=lam_prime, c=c, d=d)
    _require_both_classes(data, TWO_STEP_SVM)
    basis = BasisSet(centers=data.features, sigma=sigma)
    K = design_matrix(basis, data.features)
    n_samples = len(data)
    binary = data.binary_mask

    rejector_targets = np.where(binary, 1.0, -1.0)
    rejector_weights = np.where(binary, c, d) / n_samples
    rejector_problem = assemble_training_qp(
        K,
        hinge_rows(rejector_targets),
        n_u=0,
        lam=lam_prime,
        slack_weights=rejector_weights,
    )
    u = _solve(rejector_problem, TWO_STEP_SVM).z[: basis.size]

    accepted = binary & (K @ u > 0)
    method = TWO_STEP_SVM

    if len(np.unique(data.labels[accepted])) < 2:
        LOGGER.warning(
            "Two-step rejector left a single class, training on every labeled sample",
            accepted=int(accepted.sum()),
        )
        accepted = binary
        method = TWO_STEP_SVM + FALLBACK_SUFFIX

    LOGGER.debug(
        "Two-step rejector trained",
        accepted=int(accepted.sum()),
        labeled=int(binary.sum()),
    )
    classifier_problem = assemble_training_qp(
        K[accepted], hinge_rows(data.labels[accepted]), n_u=0, lam=lam
    )
    solution = _solve(classifier_problem, TWO_STEP_SVM)

    return TrainedModel(
        basis=basis,
        w=solution.z[: basis.size],
        u=u,
        method=method,
        hyperparameters=dict(lam=lam, lam_prime=lam_prime, sigma=sigma, c=c, d=d),
        objective=solution.objective,
        status=solution.status,
    )


def train_cro_svm(
    data: Dataset,
    lam: float,
    lam_prime: float,
    sigma: float,
    c: float,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
) -> TrainedModel:
    """Jointly learns a classifier and a rejector under the max-hinge loss.

    Ambiguous samples stay basis centers but contribute no loss term, and the slack
    average runs over the positive and negative samples. The surrogate uses
    ``alpha = 2(1 - 2c)`` and ``beta = 1 + 2c`` unless overridden, with no ``eta``
    scaling. The recorded ``d`` is ``1/2 - c``, the ambiguity penalty this method
    implicitly pays.
    """
    _require_positive(lam=lam, lam_prime=lam_prime)
    _require_both_classes(data, CRO_SVM)
    params = calibrated_params(c, 0.5 - c).with_overrides(
        alpha=alpha, beta=beta, eta=1.0
    )
    basis, w, u, solution = _fit_max_hinge(
        data, lam, lam_prime, sigma, params, loss_mask=data.binary_mask
    )

    return TrainedModel(
        basis=basis,
        w=w,
        u=u,
        method=CRO_SVM,
        loss_params=params,
        hyperparameters=dict(lam=lam, lam_prime=lam_prime, sigma=sigma, c=c),
        objective=solution.objective,
        status=solution.status,
    )


def train_cro_svm_rl(
    data: Dataset,
    lam: float,
    lam_prime: float,
    sigma: float,
    c: float,
    seed: int,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
) -> TrainedModel:
    relabeled = relabel_ambiguous(data, seed)
    model = train_cro_svm(
        relabeled,
        lam=lam,
        lam_prime=lam_prime,
        sigma=sigma,
        c=c,
        alpha=alpha,
        beta=beta,
    )

    return _retag(
        model,
        CRO_SVM_RL,
        dict(lam=lam, lam_prime=lam_prime, sigma=sigma, c=c, seed=float(seed)),
    )


def train_cad_svm(
    data: Dataset,
    lam: float,
    lam_prime: float,
    sigma: float,
    c: float,
    d: float,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
    eta: Optional[float] = None,
) -> TrainedModel:
    """Jointly learns a classifier and a rejector under the max-hinge-ambiguous loss.

    Minimizes ``lam/2 |w|^2 + lam'/2 |u|^2 + 1/N sum_i L_MHA(h_i, r_i, y_i)`` over
    every sample. The surrogate shape is the calibrated one for ``c`` unless
    ``alpha``, ``beta`` or ``eta`` override it.

    Args:
        data: Positive, negative and ambiguous samples. At least one positive and
            one negative sample are required.
        lam: Classifier regularization.
        lam_prime: Rejector regularization.
        sigma: Gaussian basis width.
        c: Rejection cost, in ``(0, 0.5)``.
        d: Penalty for accepting an ambiguous sample, in ``(0, 1]``.
        alpha: Override of the margin slope.
        beta: Override of the rejection slope.
        eta: Override of the rejection scale.

    Returns:
        The trained model with the loss parameters actually used.
    """
    _require_positive(lam=lam, lam_prime=lam_prime)
    _require_both_classes(data, CAD_SVM)
    params = calibrated_params(c, d).with_overrides(alpha=alpha, beta=beta, eta=eta)
    basis, w, u, solution = _fit_max_hinge(data, lam, lam_prime, sigma, params)

    return TrainedModel(
        basis=basis,
        w=w,
        u=u,
        method=CAD_SVM,
        loss_params=params,
        hyperparameters=dict(lam=lam, lam_prime=lam_prime, sigma=sigma, c=c, d=d),
        objective=solution.objective,
        status=solution.status,
    )


def relabel_ambiguous(data: Dataset, seed: int) -> Dataset:
    """Replaces every ambiguous label by ``+1`` or ``-1`` with probability one half."""
    ambiguous = np.flatnonzero(data.labels == 0)

    if ambiguous.size == 0:
        return data

    _, rng = init_rng(seed)
    labels = data.labels.copy()
    labels[ambiguous] = 2 * rng.integers(0, 2, size=ambiguous.size) - 1

    return data.with_labels(labels)


def _fit_max_hinge(
    data: Dataset,
    lam: float,
    lam_prime: float,
    sigma: float,
    params: LossParams,
    loss_mask: Optional[np.ndarray] = None,
) -> Tuple[BasisSet, np.ndarray, np.ndarray, QpSolution]:
    basis = BasisSet(centers=data.features, sigma=sigma)
    K = design_matrix(basis, data.features)

    if loss_mask is None:
        loss_mask = np.ones(len(data), dtype=bool)

    problem: QpProblem = assemble_training_qp(
        K[loss_mask],
        max_hinge_rows(data.labels[loss_mask], params),
        n_u=basis.size,
        lam=lam,
        lam_prime=lam_prime,
    )
    solution = _solve(problem, "max-hinge")
    z = solution.z

    return basis, z[: basis.size], z[basis.size : 2 * basis.size], solution


def _solve(problem: QpProblem, method: str) -> QpSolution:
    solution = solve_qp(problem)

    if solution.status == SolverStatus.NUMERICAL_FAILURE:
        LOGGER.error(
            "Training program could not be solved",
            method=method,
            iterations=solution.iterations,
            kkt_residual=solution.kkt_residual,
        )
        raise NumericalFailureError(
            f"The {method} training program failed numerically after "
            f"{solution.iterations} iterations (KKT residual "
            f"{solution.kkt_residual:.3g})."
        )

    if solution.status == SolverStatus.MAX_ITERATIONS:
        LOGGER.warning(
            "Training program hit its iteration budget",
            method=method,
            kkt_residual=solution.kkt_residual,
        )

    return solution


def _retag(
    model: TrainedModel, method: str, hyperparameters: Dict[str, float]
) -> TrainedModel:
    return TrainedModel(
        basis=model.basis,
        w=model.w,
        u=model.u,
        method=method,
        loss_params=model.loss_params,
        hyperparameters=hyperparameters,
        objective=model.objective,
        status=model.status,
    )


def _require_both_classes(data: Dataset, method: str) -> None:
    counts = data.counts()

    if counts.positive == 0 or counts.negative == 0:
        raise InvalidTrainingDataError(
            f"The {method} trainer needs at least one positive and one negative "
            f"sample, got {counts} in {data.name!r}."
        )


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0:
            raise InvalidTrainingDataError(
                f"The hyperparameter {name} must be positive, got {value!r}."
            )
