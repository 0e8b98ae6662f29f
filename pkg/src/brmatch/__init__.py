"""Risk-bounded maximum-weight matchings on uncertain (hyper)graphs."""

from brmatch.core import (
    Bernoulli,
    ContractViolation,
    Gaussian,
    Matching,
    Moments,
    RiskMeasure,
    UncertainHyperedge,
    UncertainHypergraph,
    alpha,
    matching_reward,
    matching_risk,
    mean_reward,
    risk_contribution,
    stddev,
    validate,
)
from brmatch.matchers import ExactGraphMatcher, GreedyMatcher, get_matcher
from brmatch.solver import (
    FilteredOrder,
    SolveOutcome,
    compute_b_max,
    filter_and_order,
    solve_brmwm,
    solve_normalized,
)

__version__ = "0.1.0"

__all__ = [
    "Bernoulli",
    "ContractViolation",
    "ExactGraphMatcher",
    "FilteredOrder",
    "Gaussian",
    "GreedyMatcher",
    "Matching",
    "Moments",
    "RiskMeasure",
    "SolveOutcome",
    "UncertainHyperedge",
    "UncertainHypergraph",
    "alpha",
    "compute_b_max",
    "filter_and_order",
    "get_matcher",
    "matching_reward",
    "matching_risk",
    "mean_reward",
    "risk_contribution",
    "solve_brmwm",
    "solve_normalized",
    "stddev",
    "validate",
]
