"""Domain types for uncertain weighted hypergraphs.

Every hyperedge carries an independent reward distribution. Algorithms only
ever consume two statistics of it: the expected reward ``r_e`` and the
standard deviation ``sigma_e``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence, Union

__all__ = [
    "ContractViolation",
    "Bernoulli",
    "Gaussian",
    "Moments",
    "EdgeDistribution",
    "RiskMeasure",
    "UncertainHyperedge",
    "UncertainHypergraph",
    "Matching",
    "mean_reward",
    "stddev",
    "risk_contribution",
    "alpha",
    "alpha_sort_key",
    "matching_reward",
    "matching_risk",
    "validate",
]


class ContractViolation(ValueError):
    """An operation was called outside its precondition."""


@dataclass(frozen=True)
class Bernoulli:
    """Reward ``weight`` with probability ``prob``, zero otherwise."""

    weight: float
    prob: float

    @property
    def mean(self) -> float:
        return self.prob * self.weight

    @property
    def stddev(self) -> float:
        return self.weight * math.sqrt(self.prob * (1.0 - self.prob))

    def violations(self) -> list[str]:
        out = []
        if not (0.0 < self.prob <= 1.0):
            out.append(f"probability {self.prob!r} outside (0, 1]")
        # zero weight is allowed so that zero-citation teams survive ingestion
        if not (self.weight >= 0.0 and math.isfinite(self.weight)):
            out.append(f"weight {self.weight!r} must be finite and non-negative")
        return out


@dataclass(frozen=True)
class Gaussian:
    """Normal reward ``N(mean, variance)``."""

    mean: float
    variance: float

    @property
    def stddev(self) -> float:
        return math.sqrt(self.variance)

    def violations(self) -> list[str]:
        out = []
        if not math.isfinite(self.mean):
            out.append(f"mean {self.mean!r} is not finite")
        if not (self.variance >= 0.0 and math.isfinite(self.variance)):
            out.append(f"variance {self.variance!r} must be finite and non-negative")
        return out


@dataclass(frozen=True)
class Moments:
    """Arbitrary reward law known only through its first two moments."""

    mean: float
    stddev: float

    def violations(self) -> list[str]:
        out = []
        if not math.isfinite(self.mean):
            out.append(f"mean {self.mean!r} is not finite")
        if not (self.stddev >= 0.0 and math.isfinite(self.stddev)):
            out.append(f"stddev {self.stddev!r} must be finite and non-negative")
        return out


EdgeDistribution = Union[Bernoulli, Gaussian, Moments]


class RiskMeasure(Enum):
    """Aggregate risk of a matching: sum of stddevs or sum of variances."""

    STD = "std"
    VAR = "var"

    def contribution(self, dist: EdgeDistribution) -> float:
        s = dist.stddev
        return s if self is RiskMeasure.STD else s * s


def mean_reward(dist: EdgeDistribution) -> float:
    return dist.mean


def stddev(dist: EdgeDistribution) -> float:
    return dist.stddev


def risk_contribution(dist: EdgeDistribution, measure: RiskMeasure) -> float:
    return measure.contribution(dist)


def alpha(dist: EdgeDistribution, measure: RiskMeasure) -> float:
    """Reward-to-risk ratio; ``inf`` for riskless edges.

    Raises:
        ContractViolation: if the expected reward is not positive.
    """
    r = dist.mean
    if not r > 0.0:
        raise ContractViolation(f"alpha needs a positive expected reward, got {r!r}")
    c = measure.contribution(dist)
    if c == 0.0:
        return math.inf
    return r / c


def alpha_sort_key(edge_id: int, reward: float, ratio: float) -> tuple:
    """Key realising the canonical decreasing-alpha order.

    Infinite ratios come first, ordered by reward descending; finite ratios
    follow in decreasing order. Remaining ties go to the smaller edge id.
    """
    if math.isinf(ratio):
        return (0, -reward, edge_id)
    return (1, -ratio, edge_id)


@dataclass(frozen=True)
class UncertainHyperedge:
    id: int
    nodes: tuple[int, ...]
    dist: EdgeDistribution

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class UncertainHypergraph:
    """Node universe ``range(n)`` plus hyperedges indexed by dense ids."""

    n: int
    edges: tuple[UncertainHyperedge, ...] = ()

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[Sequence[int], EdgeDistribution]]
    ) -> UncertainHypergraph:
        """Build a hypergraph, assigning ids in iteration order.

        Node lists are stored as given; use :func:`validate` to check them.
        """
        built = tuple(
            UncertainHyperedge(i, tuple(int(v) for v in nodes), dist)
            for i, (nodes, dist) in enumerate(edges)
        )
        return cls(int(n), built)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def rank(self) -> int:
        return max((e.size for e in self.edges), default=0)

    @cached_property
    def means(self) -> tuple[float, ...]:
        return tuple(e.dist.mean for e in self.edges)

    @cached_property
    def stddevs(self) -> tuple[float, ...]:
        return tuple(e.dist.stddev for e in self.edges)

    def contributions(self, measure: RiskMeasure) -> tuple[float, ...]:
        if measure is RiskMeasure.STD:
            return self.stddevs
        return self.variances

    @cached_property
    def variances(self) -> tuple[float, ...]:
        return tuple(s * s for s in self.stddevs)

    def is_graph(self) -> bool:
        return all(e.size == 2 for e in self.edges)

    def is_bernoulli(self) -> bool:
        return all(isinstance(e.dist, Bernoulli) for e in self.edges)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise node-disjoint hyperedges of some hypergraph."""

    edge_ids: frozenset[int] = frozenset()
    covered_nodes: frozenset[int] = field(default=frozenset(), compare=False)

    @classmethod
    def of(cls, hypergraph: UncertainHypergraph, edge_ids: Iterable[int]) -> Matching:
        """Check ``edge_ids`` against ``hypergraph`` and wrap them.

        Raises:
            ContractViolation: on unknown ids or overlapping edges.
        """
        ids = frozenset(int(i) for i in edge_ids)
        covered: set[int] = set()
        for i in sorted(ids):
            if not 0 <= i < hypergraph.m:
                raise ContractViolation(f"edge id {i} not in hypergraph")
            nodes = hypergraph.edges[i].nodes
            if not covered.isdisjoint(nodes):
                raise ContractViolation(f"edge {i} overlaps another matched edge")
            covered.update(nodes)
        return cls(ids, frozenset(covered))

    @property
    def sorted_ids(self) -> list[int]:
        return sorted(self.edge_ids)

    def __len__(self) -> int:
        return len(self.edge_ids)

    def __iter__(self):
        return iter(self.sorted_ids)


def _checked_ids(hypergraph: UncertainHypergraph, matching: Matching) -> list[int]:
    ids = matching.sorted_ids
    seen: set[int] = set()
    for i in ids:
        if not 0 <= i < hypergraph.m:
            raise ContractViolation(f"edge id {i} not in hypergraph")
        nodes = hypergraph.edges[i].nodes
        if not seen.isdisjoint(nodes):
            raise ContractViolation(f"edge {i} overlaps another matched edge")
        seen.update(nodes)
    return ids


# Both sums run over ascending edge ids so that every caller (solver,
# oracle, CLI) sees bit-identical totals for the same matching.
def matching_reward(hypergraph: UncertainHypergraph, matching: Matching) -> float:
    means = hypergraph.means
    total = 0.0
    for i in _checked_ids(hypergraph, matching):
        total += means[i]
    return total


def matching_risk(
    hypergraph: UncertainHypergraph, matching: Matching, measure: RiskMeasure
) -> float:
    contrib = hypergraph.contributions(measure)
    total = 0.0
    for i in _checked_ids(hypergraph, matching):
        total += contrib[i]
    return total


def validate(hypergraph: UncertainHypergraph) -> list[tuple[int | None, str]]:
    """Return every violated invariant as ``(edge_id, reason)``.

    An empty list means the hypergraph is well formed. Whole-graph problems
    are reported with ``edge_id=None``.
    """
    problems: list[tuple[int | None, str]] = []
    if hypergraph.n < 0:
        problems.append((None, f"node count {hypergraph.n} is negative"))
    for pos, e in enumerate(hypergraph.edges):
        if e.id != pos:
            problems.append((e.id, f"edge at position {pos} has id {e.id}"))
        if not e.nodes:
            problems.append((e.id, "edge has no nodes"))
        if len(set(e.nodes)) != len(e.nodes):
            problems.append((e.id, "duplicate node in edge"))
        elif any(a >= b for a, b in zip(e.nodes, e.nodes[1:])):
            problems.append((e.id, "nodes not in increasing order"))
        for v in e.nodes:
            if not 0 <= v < hypergraph.n:
                problems.append((e.id, f"node {v} outside [0, {hypergraph.n})"))
        for reason in e.dist.violations():
            problems.append((e.id, reason))
    return problems
