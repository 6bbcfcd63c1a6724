from __future__ import annotations

import numpy as np
import pytest

from abstain.sdk.exceptions import QpDimensionError
from abstain.sdk.qp import ConstraintRow, assemble_training_qp


def test_blocks_of_the_assembled_program() -> None:
    design = np.array([[1.0, 0.5], [0.5, 1.0], [0.2, 0.3]])
    rows = [ConstraintRow(0, offset=1.0, h_scale=-1.0, r_scale=0.5)] + [
        ConstraintRow.nonnegative(i) for i in range(3)
    ]
    problem = assemble_training_qp(design, rows, n_u=2, lam=0.1, lam_prime=0.3)

    assert problem.n == 2 + 2 + 3
    assert problem.m == 4
    np.testing.assert_allclose(np.diag(problem.P), [0.1, 0.1, 0.3, 0.3, 0, 0, 0])
    np.testing.assert_allclose(problem.q[4:], [1 / 3] * 3)
    np.testing.assert_allclose(problem.G[0], [-1.0, -0.5, 0.5, 0.25, -1.0, 0.0, 0.0])
    assert problem.h[0] == -1.0


def test_extra_quadratic_block_and_weights() -> None:
    design = np.eye(2)
    rows = [ConstraintRow.nonnegative(0), ConstraintRow.nonnegative(1)]
    block = np.array([[1.0, -1.0], [-1.0, 1.0]])
    problem = assemble_training_qp(
        design,
        rows,
        n_u=0,
        lam=1.0,
        slack_weights=np.array([0.2, 0.8]),
        w_quadratic=block,
    )

    np.testing.assert_allclose(problem.P[:2, :2], np.eye(2) + block)
    np.testing.assert_allclose(problem.q[2:], [0.2, 0.8])


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n_u=1),
        dict(n_u=0, rows=[ConstraintRow(5)]),
        dict(n_u=0, rows=[ConstraintRow(0, r_scale=1.0)]),
        dict(n_u=0, slack_weights=np.ones(3)),
        dict(n_u=0, w_quadratic=np.eye(3)),
    ],
)
def test_inconsistent_inputs_are_rejected(kwargs) -> None:
    arguments = dict(design=np.eye(2), rows=[ConstraintRow(0)], lam=1.0)
    arguments.update(kwargs)

    with pytest.raises(QpDimensionError):
        assemble_training_qp(**arguments)
