from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional

import numpy as np
import numpy.typing as npt

from abstain.sdk.exceptions import InvalidDatasetError
from abstain.sdk.losses import TernaryLabel


class LabeledSample(NamedTuple):
    features: np.ndarray
    label: TernaryLabel


class ClassCounts(NamedTuple):
    positive: int
    negative: int
    ambiguous: int

    def __str__(self) -> str:
        return (
            f"positive={self.positive} negative={self.negative} "
            f"ambiguous={self.ambiguous}"
        )


@dataclass(frozen=True)
class Dataset:
    """Feature vectors with ternary labels, ``0`` marking an ambiguous sample.

    The arrays are made read-only on construction so that datasets can be shared
    between trainers and worker processes.

    Attributes:
        features: The ``(N, D)`` feature matrix.
        labels: The ``(N,)`` integer labels in ``{+1, 0, -1}``.
        name: A human-readable identifier.
    """

    features: np.ndarray
    labels: np.ndarray
    name: str = "dataset"

    def __post_init__(self) -> None:
        features = np.array(self.features, dtype=float, copy=True)
        labels = np.array(self.labels, copy=True)

        if features.ndim != 2:
            raise InvalidDatasetError(
                f"Features must be a two-dimensional matrix, got shape "
                f"{features.shape}."
            )

        if labels.ndim != 1 or labels.shape[0] != features.shape[0]:
            raise InvalidDatasetError(
                f"Expected {features.shape[0]} labels, got shape {labels.shape}."
            )

        if labels.size and not np.all(np.isin(labels, (-1, 0, 1))):
            raise InvalidDatasetError(
                "Labels must lie in {+1, 0, -1}, got "
                f"{sorted(set(np.unique(labels).tolist()))!r}."
            )

        if not np.all(np.isfinite(features)):
            raise InvalidDatasetError("Features must be finite.")

        labels = labels.astype(np.int64)
        features.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_samples(
        cls, samples: Iterable[LabeledSample], name: str = "dataset"
    ) -> "Dataset":
        """Stacks ``(features, label)`` pairs, such as :py:attr:`samples`."""
        pairs = [(np.asarray(x, dtype=float), int(y)) for x, y in samples]

        if not pairs:
            raise InvalidDatasetError("Cannot build a dataset from zero samples.")

        return cls(
            features=np.vstack([x for x, _ in pairs]),
            labels=np.array([y for _, y in pairs]),
            name=name,
        )

    def __len__(self) -> int:
        return int(self.labels.shape[0])

    @property
    def feature_dim(self) -> int:
        return int(self.features.shape[1])

    @property
    def samples(self) -> List[LabeledSample]:
        return [
            LabeledSample(features=x, label=TernaryLabel(int(y)))
            for x, y in zip(self.features, self.labels)
        ]

    @property
    def binary_mask(self) -> np.ndarray:
        return self.labels != 0

    def counts(self) -> ClassCounts:
        return ClassCounts(
            positive=int(np.sum(self.labels == 1)),
            negative=int(np.sum(self.labels == -1)),
            ambiguous=int(np.sum(self.labels == 0)),
        )

    def subset(self, indices: npt.ArrayLike, name: Optional[str] = None) -> "Dataset":
        index_arr = np.asarray(indices)

        return Dataset(
            features=self.features[index_arr],
            labels=self.labels[index_arr],
            name=name or self.name,
        )

    def without_ambiguous(self) -> "Dataset":
        return self.subset(np.flatnonzero(self.binary_mask))

    def with_labels(self, labels: npt.ArrayLike) -> "Dataset":
        return Dataset(
            features=self.features, labels=np.asarray(labels), name=self.name
        )
