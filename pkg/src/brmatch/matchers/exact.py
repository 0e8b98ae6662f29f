from __future__ import annotations

from brmatch.core import Matching
from brmatch.matchers.blossom import max_weight_matching_mates
from brmatch.matchers.views import WeightedView


class UnsupportedInput(ValueError):
    """The engine cannot handle this input (e.g. hyperedges of size != 2)."""


def exact_graph_matching(view: WeightedView) -> Matching:
    """Maximum-weight matching of the visible prefix via the blossom method.

    Raises:
        UnsupportedInput: if a visible edge does not have exactly two nodes.
    """
    hypergraph = view.hypergraph
    weights = view.weights
    # parallel edges: only the heaviest (then lowest id) can matter
    best: dict[tuple[int, int], int] = {}
    for e in view.visible:
        nodes = hypergraph.edges[e].nodes
        if len(nodes) != 2:
            raise UnsupportedInput(f"edge {e} has {len(nodes)} nodes; blossom needs 2")
        if weights[e] <= 0:
            continue
        key = (nodes[0], nodes[1])
        cur = best.get(key)
        if cur is None or (weights[e], -e) > (weights[cur], -cur):
            best[key] = e
    if not best:
        return Matching()

    local: dict[int, int] = {}
    triples = []
    owner = {}
    for (u, v), e in sorted(best.items(), key=lambda kv: kv[1]):
        a = local.setdefault(u, len(local))
        b = local.setdefault(v, len(local))
        triples.append((a, b, float(weights[e])))
        owner[(min(a, b), max(a, b))] = e
    mates = max_weight_matching_mates(len(local), triples)
    chosen = []
    for a, b in enumerate(mates):
        if b > a:
            chosen.append(owner[(a, b)])
    covered = frozenset(v for e in chosen for v in hypergraph.edges[e].nodes)
    return Matching(frozenset(chosen), covered)


class ExactGraphMatcher:
    """Exact engine for ordinary graphs (every edge has two nodes)."""

    name = "exact"

    def match(self, view: WeightedView) -> Matching:
        return exact_graph_matching(view)

    def approximation(self, rank: int) -> float:
        return 1.0

    def __repr__(self) -> str:
        return "ExactGraphMatcher()"
