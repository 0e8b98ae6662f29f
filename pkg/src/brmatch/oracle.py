"""Exhaustive ground truth for small instances.

Enumeration is depth-first over edge ids (include, then exclude), so each
node-disjoint edge subset is visited exactly once. Partial sums are built in
ascending id order, which reproduces :func:`brmatch.core.matching_reward`
and :func:`brmatch.core.matching_risk` bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from brmatch.core import Matching, RiskMeasure, UncertainHypergraph


class BudgetExceeded(RuntimeError):
    """The instance is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class EnumerationBudget:
    max_edges: int = 22
    max_states: int = 5_000_000


DEFAULT_BUDGET = EnumerationBudget()


def _check_size(hypergraph: UncertainHypergraph, budget: EnumerationBudget) -> None:
    if hypergraph.m > budget.max_edges:
        raise BudgetExceeded(
            f"{hypergraph.m} edges exceeds the enumeration cap of {budget.max_edges}"
        )


def _walk(
    hypergraph: UncertainHypergraph,
    values: Sequence[Sequence[float]],
    budget: EnumerationBudget,
    prune: tuple[int, float] | None = None,
) -> Iterator[tuple[tuple[int, ...], list[float]]]:
    """Yield ``(ids, sums)`` for every matching; ``sums[i]`` totals
    ``values[i]`` over the ids. With ``prune=(i, cap)`` branches whose
    ``sums[i]`` exceeds ``cap`` are cut (valid for non-negative values)."""
    _check_size(hypergraph, budget)
    edges = hypergraph.edges
    m = hypergraph.m
    covered = bytearray(hypergraph.n)
    chosen: list[int] = []
    sums = [0.0] * len(values)
    states = 0

    def rec(i: int):
        nonlocal states
        states += 1
        if states > budget.max_states:
            raise BudgetExceeded(f"more than {budget.max_states} enumeration states")
        if i == m:
            yield tuple(chosen), list(sums)
            return
        nodes = edges[i].nodes
        if not any(covered[v] for v in nodes):
            saved = list(sums)
            for t, vals in enumerate(values):
                sums[t] = saved[t] + vals[i]
            if prune is None or sums[prune[0]] <= prune[1]:
                for v in nodes:
                    covered[v] = 1
                chosen.append(i)
                yield from rec(i + 1)
                chosen.pop()
                for v in nodes:
                    covered[v] = 0
            sums[:] = saved
        yield from rec(i + 1)

    yield from rec(0)


def enumerate_matchings(
    hypergraph: UncertainHypergraph, budget: EnumerationBudget = DEFAULT_BUDGET
) -> Iterator[Matching]:
    """Every matching of ``hypergraph``, the empty one included."""
    edges = hypergraph.edges
    for ids, _ in _walk(hypergraph, (), budget):
        covered = frozenset(v for e in ids for v in edges[e].nodes)
        yield Matching(frozenset(ids), covered)


def _best(candidates, key_index: int) -> tuple[tuple[int, ...], float]:
    best_ids: tuple[int, ...] = ()
    best_val = 0.0
    for ids, sums in candidates:
        val = sums[key_index]
        if val > best_val or (val == best_val and ids < best_ids):
            best_ids, best_val = ids, val
    return best_ids, best_val


def brute_force_brmwm(
    hypergraph: UncertainHypergraph,
    budget_b: float,
    measure: RiskMeasure = RiskMeasure.STD,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> tuple[Matching, float]:
    """Exact maximum expected reward over matchings with risk <= ``budget_b``.

    Ties go to the lexicographically smallest sorted id tuple.
    """
    values = (hypergraph.means, hypergraph.contributions(measure))
    walk = _walk(hypergraph, values, budget, prune=(1, budget_b))
    ids, reward = _best(walk, 0)
    return Matching.of(hypergraph, ids), reward


def brute_force_max_matching(
    hypergraph: UncertainHypergraph,
    weights: Sequence[float] | None = None,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> tuple[Matching, float]:
    """Maximum total weight over all matchings (weights default to means)."""
    if weights is None:
        weights = hypergraph.means
    ids, weight = _best(_walk(hypergraph, (weights,), budget), 0)
    return Matching.of(hypergraph, ids), weight
