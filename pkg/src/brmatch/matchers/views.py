from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Protocol, Sequence

from brmatch.core import ContractViolation, Matching, UncertainHypergraph


class PrefixFamily:
    """A hypergraph, an edge order and per-edge weights.

    Every prefix of ``order`` defines one member of a nested sequence of
    sub-hypergraphs. Data shared by all prefixes (positions, the global
    weight ranking) is computed once here.
    """

    def __init__(
        self,
        hypergraph: UncertainHypergraph,
        order: Sequence[int],
        weights: Sequence[float],
    ):
        self.hypergraph = hypergraph
        self.order = tuple(order)
        self.weights = weights
        if len(weights) != hypergraph.m:
            raise ContractViolation("weights must be indexed by edge id")

    @cached_property
    def position(self) -> dict[int, int]:
        return {e: i for i, e in enumerate(self.order)}

    @cached_property
    def by_weight(self) -> list[int]:
        """Edges of ``order`` sorted by weight descending, ties by id."""
        w = self.weights
        return sorted(self.order, key=lambda e: (-w[e], e))

    @cached_property
    def rank(self) -> int:
        edges = self.hypergraph.edges
        return max((edges[e].size for e in self.order), default=0)

    def view(self, prefix: int) -> WeightedView:
        return WeightedView(self, prefix)

    def full(self) -> WeightedView:
        return WeightedView(self, len(self.order))


@dataclass(frozen=True)
class WeightedView:
    """The first ``prefix`` edges of a :class:`PrefixFamily`."""

    family: PrefixFamily
    prefix: int

    def __post_init__(self):
        if not 0 <= self.prefix <= len(self.family.order):
            raise ContractViolation(
                f"prefix {self.prefix} outside [0, {len(self.family.order)}]"
            )

    @property
    def hypergraph(self) -> UncertainHypergraph:
        return self.family.hypergraph

    @property
    def visible(self) -> tuple[int, ...]:
        return self.family.order[: self.prefix]

    @property
    def weights(self) -> Sequence[float]:
        return self.family.weights

    @property
    def rank(self) -> int:
        edges = self.hypergraph.edges
        return max((edges[e].size for e in self.visible), default=0)

    def weight_of(self, matching: Matching) -> float:
        w = self.family.weights
        total = 0.0
        for e in matching.sorted_ids:
            total += w[e]
        return total


def full_view(
    hypergraph: UncertainHypergraph, weights: Sequence[float] | None = None
) -> WeightedView:
    """View exposing every edge, weighted by expected reward by default."""
    if weights is None:
        weights = hypergraph.means
    return PrefixFamily(hypergraph, range(hypergraph.m), weights).full()


class MatchingOracle(Protocol):
    """Black-box maximum-weight (hyper)matching routine."""

    name: str

    def match(self, view: WeightedView) -> Matching: ...

    def approximation(self, rank: int) -> float:
        """Guaranteed fraction of the optimum weight on rank-``rank`` inputs."""
        ...
