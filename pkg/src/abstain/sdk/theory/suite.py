"""Numerical sweeps that check the closed-form decisions against brute force."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import structlog
from structlog.stdlib import BoundLogger

from abstain.sdk.losses import LossParams, calibrated_params, loss_01cd, loss_mha
from abstain.sdk.utilities.random import RNGenerator, init_rng

from .oracles import (
    RISK_COLUMN_REGIMES,
    expected_01cd_risks,
    expected_mha_risk,
    lemma1_regime_codes,
    regime_point,
    relabeled_regime_codes,
    theorem2_risk_gap,
    theorem3_bound_check,
)
from .posterior import ClassPosterior, Regime, random_posteriors, simplex_grid

LOGGER: BoundLogger = structlog.stdlib.get_logger()

C_GRID: Tuple[float, ...] = (0.03, 0.06, 0.2, 0.45)
D_GRID: Tuple[float, ...] = (0.03, 0.06, 0.2, 0.5)
MINIMIZER_C_GRID: Tuple[float, ...] = (0.03, 0.2, 0.45)

DEFAULT_SIMPLEX_STEP = 0.005
DEFAULT_POSTERIORS = 20
DEFAULT_GRID_STEP = 0.01
DEFAULT_BOUND_SAMPLES = 100_000
DEFAULT_GAP_SAMPLES = 1_000

MIN_GRID_BOUND = 6.0
SAMPLE_BOUND = 5.0
TIE_TOLERANCE = 1e-9
VALUE_TOLERANCE = 1e-3
GAP_TOLERANCE = 1e-12
REFINE_FACTOR = 20
REFINE_RESOLUTION = 1e-4
SAMPLES_PER_PARAMETER_DRAW = 100
COST_MARGIN = 1e-12
GRID_MARGIN = 1.2

_RISK_COLUMN_CODES = np.array([int(regime) for regime in RISK_COLUMN_REGIMES])


@dataclass(frozen=True)
class TheoryCheckResult:
    """The outcome of one sweep.

    Attributes:
        name: The check name.
        passed: Whether every compared point agreed.
        n: The number of compared points.
        counterexample: A description of the first disagreement, if any.
    """

    name: str
    passed: bool
    n: int
    counterexample: Optional[str] = None

    def __str__(self) -> str:
        line = f"{self.name}: {'PASS' if self.passed else 'FAIL'} (n={self.n})"

        if self.counterexample:
            line += f" counterexample: {self.counterexample}"

        return line


def run_theory_suite(
    step: float = DEFAULT_SIMPLEX_STEP,
    posteriors: int = DEFAULT_POSTERIORS,
    grid_step: float = DEFAULT_GRID_STEP,
    seed: int = 0,
    eta: Optional[float] = None,
    bound_samples: int = DEFAULT_BOUND_SAMPLES,
    gap_samples: int = DEFAULT_GAP_SAMPLES,
) -> List[TheoryCheckResult]:
    """Runs every sweep and returns one result per check.

    Args:
        step: Resolution of the probability-simplex sweeps.
        posteriors: Number of random posteriors per rejection cost in the surrogate
            minimizer check.
        grid_step: Resolution of the grid search for that check; see
            :py:func:`search_grid`.
        seed: Seed of every random draw.
        eta: Replaces the calibrated surrogate scale in the surrogate minimizer
            check. A value other than ``2 / (1 + 2c)`` is expected to fail.
        bound_samples: Number of random tuples of the pointwise bound sweeps.
        gap_samples: Number of random tuples of the relabeling risk-gap sweep.
    """
    _, rng = init_rng(seed)
    results = [
        check_lemma1(step),
        check_theorem1(rng, posteriors, grid_step, eta),
        check_theorem2(rng, gap_samples),
        check_theorem3(rng, bound_samples),
        check_theorem4(step),
        check_mha_bound(rng, bound_samples),
    ]

    for result in results:
        LOGGER.info(
            "Theory check finished",
            check=result.name,
            passed=result.passed,
            n=result.n,
        )

    return results


def check_lemma1(
    step: float,
    c_values: Sequence[float] = C_GRID,
    d_values: Sequence[float] = D_GRID,
) -> TheoryCheckResult:
    """Closed-form regime against the argmin of the three expected risks."""
    pp, p0, pm = simplex_grid(step)
    n_compared = 0

    for c in c_values:
        for d in d_values:
            risks = expected_01cd_risks(pp, p0, pm, c, d)
            ordered = np.sort(risks, axis=1)
            clear = ordered[:, 1] - ordered[:, 0] > TIE_TOLERANCE
            brute = _RISK_COLUMN_CODES[np.argmin(risks, axis=1)]
            closed = lemma1_regime_codes(pp, pm, c, d)
            disagree = np.flatnonzero(clear & (brute != closed))
            n_compared += int(clear.sum())

            if disagree.size:
                i = int(disagree[0])

                return TheoryCheckResult(
                    name="lemma1",
                    passed=False,
                    n=n_compared,
                    counterexample=(
                        f"posterior=({pp[i]:.6g}, {p0[i]:.6g}, {pm[i]:.6g}) c={c} "
                        f"d={d}: closed form {Regime(int(closed[i])).name}, argmin "
                        f"{Regime(int(brute[i])).name}"
                    ),
                )

    return TheoryCheckResult(name="lemma1", passed=True, n=n_compared)


def check_theorem1(
    rng: RNGenerator,
    posteriors: int,
    grid_step: float,
    eta: Optional[float] = None,
    c_values: Sequence[float] = MINIMIZER_C_GRID,
    d_values: Sequence[float] = D_GRID,
) -> TheoryCheckResult:
    """Grid minimization of the expected MHA loss against the closed-form point.

    The closed-form point must attain the grid minimum within ``1e-3``. Where
    one regime's point is clearly best, the grid minimizer must also share its
    signs: ``sign(h)`` and ``sign(r)`` when accepting, ``sign(r)`` when rejecting.
    """
    n_compared = 0

    for c in c_values:
        H, R = search_grid(c, grid_step)

        for k, posterior in enumerate(random_posteriors(rng, posteriors)):
            d = d_values[k % len(d_values)]
            params = calibrated_params(c, d).with_overrides(eta=eta)
            regime = Regime(
                int(lemma1_regime_codes(posterior.pi_plus, posterior.pi_minus, c, d))
            )
            h_star, r_star = regime_point(regime, c)
            closed_value = float(expected_mha_risk(posterior, h_star, r_star, params))
            h_min, r_min, grid_value = _minimize_on_grid(
                posterior, params, H, R, grid_step
            )
            n_compared += 1
            problem = None

            if abs(closed_value - grid_value) > VALUE_TOLERANCE:
                problem = (
                    f"closed-form value {closed_value:.6f} at ({h_star:.4f}, "
                    f"{r_star:.4f}) vs grid minimum {grid_value:.6f} at "
                    f"({h_min:.4f}, {r_min:.4f})"
                )

            elif _regime_is_clear(posterior, params, c) and not _signs_match(
                regime, h_min, r_min
            ):
                problem = (
                    f"grid minimizer ({h_min:.4f}, {r_min:.4f}) does not have the "
                    f"signs of regime {regime.name}"
                )

            if problem is not None:
                return TheoryCheckResult(
                    name="theorem1",
                    passed=False,
                    n=n_compared,
                    counterexample=(
                        f"posterior={posterior} c={c} d={d} eta={params.eta:.6g}: "
                        f"{problem}"
                    ),
                )

    return TheoryCheckResult(name="theorem1", passed=True, n=n_compared)


def check_theorem2(rng: RNGenerator, samples: int) -> TheoryCheckResult:
    """Relabeling risk gap against ``pi_0 c`` on random tuples."""
    for i, posterior in enumerate(random_posteriors(rng, samples)):
        h, r = rng.uniform(-SAMPLE_BOUND, SAMPLE_BOUND, size=2)
        c = float(_open_costs(rng, 1)[0])

        if h == 0.0:
            continue

        gap = theorem2_risk_gap(posterior, float(h), float(r), c)
        expected = posterior.pi_zero * c

        if abs(gap - expected) > GAP_TOLERANCE:
            return TheoryCheckResult(
                name="theorem2",
                passed=False,
                n=i + 1,
                counterexample=(
                    f"posterior={posterior} h={h:.6g} r={r:.6g} c={c:.6g}: gap "
                    f"{gap!r} != {expected!r}"
                ),
            )

    return TheoryCheckResult(name="theorem2", passed=True, n=samples)


def check_theorem3(rng: RNGenerator, samples: int) -> TheoryCheckResult:
    """Averaged max-hinge loss over both relabelings bounds the ambiguous loss."""
    n_checked = 0

    for size in _chunk_sizes(samples):
        c = float(_open_costs(rng, 1)[0])
        h = rng.uniform(-SAMPLE_BOUND, SAMPLE_BOUND, size=size)
        r = rng.uniform(-SAMPLE_BOUND, SAMPLE_BOUND, size=size)

        if not theorem3_bound_check(h, r, c):
            for i in range(size):
                if not theorem3_bound_check(h[i], r[i], c):
                    return TheoryCheckResult(
                        name="theorem3",
                        passed=False,
                        n=n_checked + i + 1,
                        counterexample=f"h={h[i]:.6g} r={r[i]:.6g} c={c:.6g}",
                    )

        n_checked += size

    return TheoryCheckResult(name="theorem3", passed=True, n=n_checked)


def check_theorem4(
    step: float, c_values: Sequence[float] = MINIMIZER_C_GRID
) -> TheoryCheckResult:
    """Relabeled-data regime against the 0-1-c-d regime with ``d = 1/2 - c``."""
    pp, p0, pm = simplex_grid(step)
    n_compared = 0

    for c in c_values:
        risks = expected_01cd_risks(pp, p0, pm, c, 0.5 - c)
        ordered = np.sort(risks, axis=1)
        clear = ordered[:, 1] - ordered[:, 0] > TIE_TOLERANCE
        relabeled = relabeled_regime_codes(pp, pm, c)
        direct = lemma1_regime_codes(pp, pm, c, 0.5 - c)
        disagree = np.flatnonzero(clear & (relabeled != direct))
        n_compared += int(clear.sum())

        if disagree.size:
            i = int(disagree[0])

            return TheoryCheckResult(
                name="theorem4",
                passed=False,
                n=n_compared,
                counterexample=(
                    f"posterior=({pp[i]:.6g}, {p0[i]:.6g}, {pm[i]:.6g}) c={c}: "
                    f"relabeled {Regime(int(relabeled[i])).name}, direct "
                    f"{Regime(int(direct[i])).name}"
                ),
            )

    return TheoryCheckResult(name="theorem4", passed=True, n=n_compared)


def check_mha_bound(rng: RNGenerator, samples: int) -> TheoryCheckResult:
    """The MHA loss bounds the 0-1-c-d loss under the calibrated shape."""
    n_checked = 0

    for size in _chunk_sizes(samples):
        c = float(_open_costs(rng, 1)[0])
        d = float(1.0 - rng.uniform(0.0, 1.0))
        params = calibrated_params(c, d)
        h = rng.uniform(-SAMPLE_BOUND, SAMPLE_BOUND, size=size)
        r = rng.uniform(-SAMPLE_BOUND, SAMPLE_BOUND, size=size)
        y = rng.integers(-1, 2, size=size)
        surrogate = np.asarray(loss_mha(h, r, y, params))
        target = np.asarray(loss_01cd(h, r, y, params))
        violations = np.flatnonzero(surrogate < target)

        if violations.size:
            i = int(violations[0])

            return TheoryCheckResult(
                name="mha_bound",
                passed=False,
                n=n_checked + i + 1,
                counterexample=(
                    f"h={h[i]:.6g} r={r[i]:.6g} y={int(y[i])} c={c:.6g} d={d:.6g}: "
                    f"{surrogate[i]!r} < {target[i]!r}"
                ),
            )

        n_checked += size

    return TheoryCheckResult(name="mha_bound", passed=True, n=n_checked)


def search_grid(c: float, grid_step: float) -> Tuple[np.ndarray, np.ndarray]:
    """The ``(h, r)`` mesh searched at rejection cost ``c``.

    Each axis spans at least ``[-6, 6]`` and widens to 1.2 times the largest
    closed-form coordinate, which grows as ``2 / (1 - 4c^2)`` for ``h``.
    """
    h_star, r_star = regime_point(Regime.ACCEPT_POSITIVE, c)
    h_bound = max(MIN_GRID_BOUND, GRID_MARGIN * abs(h_star))
    r_bound = max(MIN_GRID_BOUND, GRID_MARGIN * abs(r_star))
    h_axis = np.arange(-h_bound, h_bound + 0.5 * grid_step, grid_step)
    r_axis = np.arange(-r_bound, r_bound + 0.5 * grid_step, grid_step)
    H, R = np.meshgrid(h_axis, r_axis, indexing="ij")

    return H, R


def _minimize_on_grid(
    posterior: ClassPosterior,
    params: LossParams,
    H: np.ndarray,
    R: np.ndarray,
    grid_step: float,
) -> Tuple[float, float, float]:
    values = expected_mha_risk(posterior, H, R, params)
    index = np.unravel_index(int(np.argmin(values)), values.shape)
    h_min, r_min = float(H[index]), float(R[index])
    best = float(values[index])
    window = grid_step

    while window > REFINE_RESOLUTION:
        local_step = window / REFINE_FACTOR
        offsets = np.arange(-REFINE_FACTOR, REFINE_FACTOR + 1) * local_step
        h_local, r_local = np.meshgrid(h_min + offsets, r_min + offsets, indexing="ij")
        local = expected_mha_risk(posterior, h_local, r_local, params)
        index = np.unravel_index(int(np.argmin(local)), local.shape)

        if float(local[index]) < best:
            h_min, r_min = float(h_local[index]), float(r_local[index])
            best = float(local[index])

        window = local_step

    return h_min, r_min, best


def _regime_is_clear(
    posterior: ClassPosterior, params: LossParams, c: float
) -> bool:
    values = sorted(
        float(expected_mha_risk(posterior, *regime_point(regime, c), params))
        for regime in Regime
    )

    return values[1] - values[0] > VALUE_TOLERANCE


def _signs_match(regime: Regime, h: float, r: float) -> bool:
    if regime == Regime.REJECT:
        return r < 0

    return r > 0 and np.sign(h) == int(regime)


def _open_costs(rng: RNGenerator, size: int) -> np.ndarray:
    """Rejection costs drawn uniformly from the open interval ``(0, 1/2)``."""
    costs = 0.5 * rng.uniform(0.0, 1.0, size=size)

    return np.clip(costs, COST_MARGIN, 0.5 - COST_MARGIN)


def _chunk_sizes(samples: int) -> List[int]:
    """Splits a sweep into chunks that each share one draw of ``(c, d)``."""
    full, rest = divmod(samples, SAMPLES_PER_PARAMETER_DRAW)

    return [SAMPLES_PER_PARAMETER_DRAW] * full + ([rest] if rest else [])
