from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Mapping, Optional, Tuple

import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.datasets import Dataset
from abstain.sdk.exceptions import InvalidTrainingDataError, UnknownMethodError

from .model import TrainedModel
from .trainers import (
    CAD_SVM,
    CRO_SVM,
    CRO_SVM_RL,
    LAPSVM,
    SVM,
    SVM_RL,
    TWO_STEP_SVM,
    train_cad_svm,
    train_cro_svm,
    train_cro_svm_rl,
    train_lapsvm,
    train_svm,
    train_svm_rl,
    train_two_step,
)

LOGGER: BoundLogger = structlog.stdlib.get_logger()

Trainer = Callable[[Dataset, Mapping[str, float], int], TrainedModel]


@dataclass(frozen=True)
class MethodSpec:
    """A registered method.

    Attributes:
        tag: The method tag.
        trainer: Trains on a dataset from a hyperparameter mapping and a seed. The
            mapping may also carry ``alpha``, ``beta`` and ``eta`` shape overrides.
        axes: The hyperparameters the trainer reads, in grid order.
    """

    tag: str
    trainer: Trainer
    axes: Tuple[str, ...]

    def train(
        self, data: Dataset, hyperparameters: Mapping[str, float], seed: int = 0
    ) -> TrainedModel:
        missing = [axis for axis in self.axes if axis not in hyperparameters]

        if missing:
            raise InvalidTrainingDataError(
                f"The {self.tag} trainer is missing hyperparameters {missing!r}."
            )

        return self.trainer(data, hyperparameters, seed)


def get_method(tag: str) -> MethodSpec:
    """Gets a method from the registry.

    The following methods are available in the registry,

    - `svm`
    - `svm-rl`
    - `lapsvm`
    - `two-step-svm`
    - `cro-svm`
    - `cro-svm-rl`
    - `cad-svm`

    Args:
        tag: A string that identifies the method. It must match one of the tags in
            the registry.

    Returns:
        The registered :py:class:`MethodSpec`.
    """
    spec: Optional[MethodSpec] = METHODS_REGISTRY.get(tag)

    if spec is None:
        LOGGER.error("Method not in registry", tag=tag)
        raise UnknownMethodError(
            f"Could not find any method named {tag!r}. Valid methods are "
            f"{', '.join(METHODS_REGISTRY)}."
        )

    return spec


def _svm(data: Dataset, hp: Mapping[str, float], seed: int) -> TrainedModel:
    return train_svm(data.without_ambiguous(), lam=hp["lam"], sigma=hp["sigma"])


def _svm_rl(data: Dataset, hp: Mapping[str, float], seed: int) -> TrainedModel:
    return train_svm_rl(data, lam=hp["lam"], sigma=hp["sigma"], seed=seed)


def _lapsvm(data: Dataset, hp: Mapping[str, float], seed: int) -> TrainedModel:
    return train_lapsvm(
        data,
        lam=hp["lam"],
        sigma=hp["sigma"],
        sigma_prime=hp["sigma_prime"],
        tau=hp["tau"],
    )


def _two_step(data: Dataset, hp: Mapping[str, float], seed: int) -> TrainedModel:
    return train_two_step(
        data,
        lam=hp["lam"],
        lam_prime=hp["lam_prime"],
        sigma=hp["sigma"],
        c=hp["c"],
        d=hp["d"],
    )


def _cro_svm(data: Dataset, hp: Mapping[str, float], seed: int) -> TrainedModel:
    return train_cro_svm(
        data,
        lam=hp["lam"],
        lam_prime=hp["lam_prime"],
        sigma=hp["sigma"],
        c=hp["c"],
        alpha=hp.get("alpha"),
        beta=hp.get("beta"),
    )


def _cro_svm_rl(data: Dataset, hp: Mapping[str, float], seed: int) -> TrainedModel:
    return train_cro_svm_rl(
        data,
        lam=hp["lam"],
        lam_prime=hp["lam_prime"],
        sigma=hp["sigma"],
        c=hp["c"],
        seed=seed,
        alpha=hp.get("alpha"),
        beta=hp.get("beta"),
    )


def _cad_svm(data: Dataset, hp: Mapping[str, float], seed: int) -> TrainedModel:
    return train_cad_svm(
        data,
        lam=hp["lam"],
        lam_prime=hp["lam_prime"],
        sigma=hp["sigma"],
        c=hp["c"],
        d=hp["d"],
        alpha=hp.get("alpha"),
        beta=hp.get("beta"),
        eta=hp.get("eta"),
    )


METHODS_REGISTRY: Dict[str, MethodSpec] = {
    spec.tag: spec
    for spec in (
        MethodSpec(SVM, _svm, ("lam", "sigma")),
        MethodSpec(SVM_RL, _svm_rl, ("lam", "sigma")),
        MethodSpec(LAPSVM, _lapsvm, ("lam", "sigma", "sigma_prime", "tau")),
        MethodSpec(TWO_STEP_SVM, _two_step, ("lam", "lam_prime", "sigma", "c", "d")),
        MethodSpec(CRO_SVM, _cro_svm, ("lam", "lam_prime", "sigma", "c")),
        MethodSpec(CRO_SVM_RL, _cro_svm_rl, ("lam", "lam_prime", "sigma", "c")),
        MethodSpec(CAD_SVM, _cad_svm, ("lam", "lam_prime", "sigma", "c", "d")),
    )
}
