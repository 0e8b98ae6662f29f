from __future__ import annotations

from brmatch.core import Matching
from brmatch.matchers.views import WeightedView


def greedy_matching(view: WeightedView) -> Matching:
    """Scan visible edges by weight descending; keep those that still fit.

    Ties in weight go to the smaller edge id. On a rank-``k`` hypergraph the
    result weighs at least ``1/k`` of the maximum.
    """
    family = view.family
    hypergraph = family.hypergraph
    edges = hypergraph.edges
    prefix = view.prefix
    if prefix == 0:
        return Matching()
    position = family.position
    covered = bytearray(hypergraph.n)
    chosen = []
    if family.rank <= 2:
        for e in family.by_weight:
            if position[e] >= prefix:
                continue
            nodes = edges[e].nodes
            u = nodes[0]
            v = nodes[-1]
            if covered[u] or covered[v]:
                continue
            covered[u] = 1
            covered[v] = 1
            chosen.append(e)
    else:
        for e in family.by_weight:
            if position[e] >= prefix:
                continue
            nodes = edges[e].nodes
            if any(covered[v] for v in nodes):
                continue
            for v in nodes:
                covered[v] = 1
            chosen.append(e)
    covered_nodes = frozenset(v for e in chosen for v in edges[e].nodes)
    return Matching(frozenset(chosen), covered_nodes)


class GreedyMatcher:
    """Greedy engine; works on hypergraphs of any rank."""

    name = "greedy"

    def match(self, view: WeightedView) -> Matching:
        return greedy_matching(view)

    def approximation(self, rank: int) -> float:
        return 1.0 / max(rank, 1)

    def __repr__(self) -> str:
        return "GreedyMatcher()"
