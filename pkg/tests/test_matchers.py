import itertools
import random

import pytest

from brmatch import Moments, UncertainHypergraph
from brmatch.fixtures import A, B, C, D, nonmonotone_square
from brmatch.matchers import (
    ExactGraphMatcher,
    GreedyMatcher,
    PrefixFamily,
    UnsupportedInput,
    exact_graph_matching,
    full_view,
    greedy_matching,
)
from brmatch.matchers.blossom import max_weight_matching_mates
from brmatch.oracle import brute_force_max_matching

from instances import random_hypergraph, weighted_graph


def path_graph(*ws):
    edges = [((i, i + 1), Moments(w, 0.0)) for i, w in enumerate(ws)]
    return UncertainHypergraph.from_edges(len(ws) + 1, edges)


def subset_max(H, weights):
    """Independent oracle: best weight over all 2^m edge subsets."""
    best = 0.0
    for r in range(H.m + 1):
        for combo in itertools.combinations(range(H.m), r):
            nodes = [v for e in combo for v in H.edges[e].nodes]
            if len(nodes) == len(set(nodes)):
                best = max(best, sum(weights[e] for e in combo))
    return best


def check_valid(view, matching):
    visible = set(view.visible)
    assert matching.edge_ids <= visible
    seen = set()
    for e in matching.sorted_ids:
        nodes = set(view.hypergraph.edges[e].nodes)
        assert not (nodes & seen)
        seen |= nodes
    assert matching.covered_nodes == seen


def test_greedy_no_conflict_path():
    H = path_graph(3, 2, 3)
    assert greedy_matching(full_view(H)).sorted_ids == [0, 2]


def test_greedy_suboptimal_path():
    H = path_graph(2, 3, 2)
    got = greedy_matching(full_view(H))
    assert got.sorted_ids == [1]
    opt = subset_max(H, H.means)
    assert opt == 4
    assert 3 / opt >= 0.5


def test_greedy_single_and_empty():
    H = path_graph(5)
    assert greedy_matching(full_view(H)).sorted_ids == [0]
    fam = PrefixFamily(H, [0], H.means)
    assert len(greedy_matching(fam.view(0))) == 0


def test_greedy_ties_prefer_lower_id():
    H = path_graph(2, 2)
    assert greedy_matching(full_view(H)).sorted_ids == [0]


def test_exact_figure2_prefixes():
    H = nonmonotone_square()
    # ratio order: (A,C), (A,B), (B,D), (C,D)
    fam = PrefixFamily(H, [2, 0, 3, 1], H.means)
    assert exact_graph_matching(fam.view(1)).sorted_ids == [2]
    assert exact_graph_matching(fam.view(2)).sorted_ids == [0]
    got = exact_graph_matching(fam.view(3))
    assert {H.edges[e].nodes for e in got} == {(A, C), (B, D)}


def test_exact_triangle():
    H = UncertainHypergraph.from_edges(3, [
        ((0, 1), Moments(5, 0)), ((1, 2), Moments(4, 0)), ((0, 2), Moments(3, 0))])
    assert exact_graph_matching(full_view(H)).sorted_ids == [0]
    assert subset_max(H, H.means) == 5


def test_exact_rejects_hyperedges():
    H = UncertainHypergraph.from_edges(3, [((0, 1, 2), Moments(1, 0))])
    with pytest.raises(UnsupportedInput):
        exact_graph_matching(full_view(H))


def test_exact_parallel_edges_take_heaviest():
    H = UncertainHypergraph.from_edges(2, [((0, 1), Moments(1, 0)), ((0, 1), Moments(3, 0))])
    assert exact_graph_matching(full_view(H)).sorted_ids == [1]


def test_blossom_needs_blossom():
    # odd cycle plus pendant edges: optimum uses an augmenting path through a blossom
    edges = [(0, 1, 6.0), (1, 2, 6.0), (0, 2, 6.0), (2, 3, 10.0), (0, 4, 10.0), (1, 5, 1.0)]
    mates = max_weight_matching_mates(6, edges)
    assert mates[2] == 3 and mates[0] == 4 and mates[1] == 5


def test_blossom_empty():
    assert max_weight_matching_mates(3, []) == [-1, -1, -1]


@pytest.mark.parametrize("integer", [True, False])
def test_exact_matches_brute_force(integer):
    rng = random.Random(11 if integer else 12)
    for _ in range(300):
        H = weighted_graph(rng, integer=integer)
        view = full_view(H)
        got = exact_graph_matching(view)
        check_valid(view, got)
        _, best = brute_force_max_matching(H)
        assert view.weight_of(got) == best


def test_greedy_half_on_graphs():
    rng = random.Random(13)
    for _ in range(300):
        H = weighted_graph(rng)
        view = full_view(H)
        got = greedy_matching(view)
        check_valid(view, got)
        _, best = brute_force_max_matching(H)
        assert view.weight_of(got) >= 0.5 * best


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_greedy_one_over_k_on_hypergraphs(k):
    rng = random.Random(100 + k)
    for _ in range(150):
        H = random_hypergraph(rng, k)
        weights = [abs(x) + 0.01 for x in H.means]
        view = PrefixFamily(H, range(H.m), weights).full()
        got = greedy_matching(view)
        check_valid(view, got)
        _, best = brute_force_max_matching(H, weights)
        assert view.weight_of(got) >= best / k


def from_scratch_greedy(H, visible, weights):
    covered, chosen = set(), []
    for e in sorted(visible, key=lambda e: (-weights[e], e)):
        nodes = set(H.edges[e].nodes)
        if not nodes & covered:
            covered |= nodes
            chosen.append(e)
    return sorted(chosen)


def test_greedy_prefix_matches_from_scratch():
    rng = random.Random(14)
    for _ in range(100):
        H = random_hypergraph(rng, rng.randint(2, 4))
        weights = [abs(x) + 0.01 for x in H.means]
        order = list(range(H.m))
        rng.shuffle(order)
        fam = PrefixFamily(H, order, weights)
        for i in range(H.m + 1):
            view = fam.view(i)
            assert greedy_matching(view).sorted_ids == from_scratch_greedy(H, view.visible, weights)


def test_engines_are_deterministic():
    rng = random.Random(15)
    H = weighted_graph(rng, max_n=10, max_m=20)
    for engine in (GreedyMatcher(), ExactGraphMatcher()):
        assert engine.match(full_view(H)) == engine.match(full_view(H))


def test_declared_approximation():
    assert GreedyMatcher().approximation(3) == pytest.approx(1 / 3)
    assert ExactGraphMatcher().approximation(2) == 1.0
