from .oracles import (
    RISK_COLUMN_REGIMES,
    expected_01cd_risk,
    expected_01cd_risks,
    expected_mha_risk,
    lemma1_optimal_regime,
    lemma1_regime_codes,
    regime_point,
    relabeled_regime_codes,
    theorem1_minimizer,
    theorem2_risk_gap,
    theorem3_bound_check,
    theorem4_minimizer_check,
)
from .posterior import ClassPosterior, Regime, random_posteriors, simplex_grid
from .suite import TheoryCheckResult, run_theory_suite

__all__ = [
    "RISK_COLUMN_REGIMES",
    "ClassPosterior",
    "Regime",
    "TheoryCheckResult",
    "expected_01cd_risk",
    "expected_01cd_risks",
    "expected_mha_risk",
    "lemma1_optimal_regime",
    "lemma1_regime_codes",
    "random_posteriors",
    "regime_point",
    "relabeled_regime_codes",
    "run_theory_suite",
    "simplex_grid",
    "theorem1_minimizer",
    "theorem2_risk_gap",
    "theorem3_bound_check",
    "theorem4_minimizer_check",
]
