"""Bounded-risk maximum-weight matching by alpha-ordered binary search.

Edges that cannot appear in any feasible optimum (non-positive reward, or a
risk contribution above the budget on their own) are dropped. The rest are
ranked by reward-to-risk ratio, which induces a nested family of prefix
hypergraphs. A black-box matcher is run on prefixes while a binary search
looks for an adjacent pair ``(l, l+1)`` whose matching risks straddle the
budget; the answer is the better of prefix ``l``'s matching and the single
edge at position ``l + 1``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from brmatch.core import (
    ContractViolation,
    Matching,
    RiskMeasure,
    UncertainHypergraph,
    alpha_sort_key,
    matching_reward,
    matching_risk,
)
from brmatch.matchers import GreedyMatcher, MatchingOracle, PrefixFamily


@dataclass(frozen=True)
class FilteredOrder:
    """Surviving edge ids in decreasing-alpha order with cached statistics."""

    edge_ids: tuple[int, ...]
    rewards: tuple[float, ...]
    risks: tuple[float, ...]
    alphas: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.edge_ids)


@dataclass(frozen=True)
class SolveOutcome:
    matching: Matching
    reward: float
    risk: float
    budget: float
    ell_star: int | None
    fallback_used: bool
    matcher_calls: int
    elapsed: float
    order: FilteredOrder = field(repr=False)
    # risk of every prefix matching the search evaluated, keyed by prefix
    prefix_risks: dict[int, float] = field(default_factory=dict, repr=False)


def filter_and_order(
    hypergraph: UncertainHypergraph, budget_b: float, measure: RiskMeasure
) -> FilteredOrder:
    if not budget_b >= 0:
        raise ContractViolation(f"risk bound must be non-negative, got {budget_b!r}")
    means = hypergraph.means
    contrib = hypergraph.contributions(measure)
    kept = []
    for e in range(hypergraph.m):
        r, c = means[e], contrib[e]
        if r > 0.0 and c <= budget_b:
            ratio = math.inf if c == 0.0 else r / c
            kept.append((alpha_sort_key(e, r, ratio), e, ratio))
    kept.sort()
    ids = tuple(e for _, e, _ in kept)
    return FilteredOrder(
        edge_ids=ids,
        rewards=tuple(means[e] for e in ids),
        risks=tuple(contrib[e] for e in ids),
        alphas=tuple(a for _, _, a in kept),
    )


def solve_brmwm(
    hypergraph: UncertainHypergraph,
    budget_b: float,
    measure: RiskMeasure = RiskMeasure.STD,
    oracle: MatchingOracle | None = None,
) -> SolveOutcome:
    """Approximate the best expected reward subject to ``risk <= budget_b``.

    The risk bound is a hard constraint compared with ``<=`` and no slack.
    With an exact graph matcher the reward is at least a third of the
    optimum; with a ``c``-approximate matcher it is at least ``c / (2 + c)``
    of it.
    """
    oracle = oracle or GreedyMatcher()
    start = time.perf_counter()
    order = filter_and_order(hypergraph, budget_b, measure)
    m = len(order)
    if m == 0:
        return SolveOutcome(Matching(), 0.0, 0.0, budget_b, None, False, 0,
                            time.perf_counter() - start, order)

    family = PrefixFamily(hypergraph, order.edge_ids, hypergraph.means)
    cache: dict[int, tuple[Matching, float]] = {}
    calls = 0

    def prefix(i: int) -> tuple[Matching, float]:
        nonlocal calls
        if i not in cache:
            calls += 1
            mt = oracle.match(family.view(i))
            cache[i] = (mt, matching_risk(hypergraph, mt, measure))
        return cache[i]

    def finish(mt: Matching, risk: float, ell: int, fallback: bool) -> SolveOutcome:
        if not risk <= budget_b:
            raise AssertionError(f"infeasible output: risk {risk!r} > {budget_b!r}")
        return SolveOutcome(
            matching=mt,
            reward=matching_reward(hypergraph, mt),
            risk=risk,
            budget=budget_b,
            ell_star=ell,
            fallback_used=fallback,
            matcher_calls=calls,
            elapsed=time.perf_counter() - start,
            order=order,
            prefix_risks={i: r for i, (_, r) in sorted(cache.items())},
        )

    full, full_risk = prefix(m)
    if full_risk <= budget_b:
        return finish(full, full_risk, m, False)

    # Invariant: risk(M(low)) <= B < risk(M(high)). Prefix 1 is the single
    # best-ratio edge, feasible by filtering; prefix m is infeasible.
    low, high = 1, m
    while True:
        if low >= high:
            raise AssertionError("bracket collapsed; matcher broke the prefix invariant")
        mid = (low + high) // 2
        _, r_mid = prefix(mid)
        if r_mid > budget_b:
            high = mid
            continue
        _, r_next = prefix(mid + 1)
        if r_next > budget_b:
            ell = mid
            break
        low = mid + 1

    best, best_risk = cache[ell]
    best_reward = matching_reward(hypergraph, best)
    e_next = order.edge_ids[ell]
    if order.rewards[ell] > best_reward:
        single = Matching.of(hypergraph, [e_next])
        single_risk = matching_risk(hypergraph, single, measure)
        return finish(single, single_risk, ell, True)
    return finish(best, best_risk, ell, False)


def compute_b_max(hypergraph: UncertainHypergraph, measure: RiskMeasure = RiskMeasure.STD) -> float:
    """Risk of the greedy matching under risk-contribution weights."""
    contrib = hypergraph.contributions(measure)
    ids = [e for e in range(hypergraph.m) if contrib[e] > 0.0]
    if not ids:
        return 0.0
    view = PrefixFamily(hypergraph, ids, contrib).full()
    mt = GreedyMatcher().match(view)
    return matching_risk(hypergraph, mt, measure)


def solve_normalized(
    hypergraph: UncertainHypergraph,
    normalized: float,
    measure: RiskMeasure = RiskMeasure.STD,
    oracle: MatchingOracle | None = None,
    b_max: float | None = None,
) -> SolveOutcome:
    """Solve with ``B = normalized * B_max``; ``B_max`` is computed when omitted."""
    if not 0.0 <= normalized <= 1.0:
        raise ContractViolation(f"normalized risk must lie in [0, 1], got {normalized!r}")
    if b_max is None:
        b_max = compute_b_max(hypergraph, measure)
    return solve_brmwm(hypergraph, normalized * b_max, measure, oracle)


def max_weight_matching(hypergraph: UncertainHypergraph, oracle: MatchingOracle | None = None) -> Matching:
    """Unconstrained matching by expected reward (positive-reward edges only)."""
    oracle = oracle or GreedyMatcher()
    means = hypergraph.means
    ids = [e for e in range(hypergraph.m) if means[e] > 0.0]
    if not ids:
        return Matching()
    return oracle.match(PrefixFamily(hypergraph, ids, means).full())


__all__ = [
    "FilteredOrder",
    "SolveOutcome",
    "compute_b_max",
    "filter_and_order",
    "max_weight_matching",
    "solve_brmwm",
    "solve_normalized",
]
