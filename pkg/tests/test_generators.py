import math

import numpy as np
import pytest

from brmatch import validate
from brmatch.generators import (
    PROB_DOMAIN,
    Constant,
    GaussianClipped,
    Interval,
    UniformRange,
    attach_bernoulli,
    attach_gaussian,
    ba_topology,
    gnp_topology,
    make_rng,
    parse_sampler,
    replicate_seeds,
)
from brmatch.ingest import dump_hypergraph


def test_gnp_edge_count_near_expectation():
    n, p = 6000, 0.005
    total = n * (n - 1) // 2
    mean, sd = total * p, math.sqrt(total * p * (1 - p))
    for seed in range(3):
        topo = gnp_topology(n, p, make_rng(seed))
        assert abs(topo.m - mean) <= 3 * sd


def test_gnp_extremes():
    assert gnp_topology(10, 0.0, make_rng(0)).m == 0
    full = gnp_topology(10, 1.0, make_rng(0))
    assert full.m == 45
    assert {tuple(e) for e in full.edges} == {(i, j) for i in range(10) for j in range(i + 1, 10)}
    assert gnp_topology(1, 0.5, make_rng(0)).m == 0


def test_gnp_pairs_are_distinct_and_ordered():
    topo = gnp_topology(300, 0.1, make_rng(4))
    e = topo.edges
    assert (e[:, 0] < e[:, 1]).all() and (e[:, 1] < 300).all()
    assert len({tuple(x) for x in e}) == topo.m


def test_gnp_pair_frequency_is_p():
    # every pair should appear with frequency ~p across seeds
    n, p, runs = 8, 0.3, 2000
    counts = np.zeros((n, n))
    for s in range(runs):
        for u, v in gnp_topology(n, p, make_rng(s)).edges:
            counts[u, v] += 1
    freq = counts[np.triu_indices(n, 1)] / runs
    sd = math.sqrt(p * (1 - p) / runs)
    assert np.all(np.abs(freq - p) <= 4.5 * sd)


def test_ba_sizes_and_tail():
    topo = ba_topology(6000, 15, make_rng(2))
    assert topo.m == 15 * 16 // 2 + 15 * (6000 - 16)
    assert abs(topo.m - 90_000) < 500
    deg = np.bincount(topo.edges.ravel(), minlength=6000)
    assert deg.max() / deg.mean() >= 10
    assert len({tuple(x) for x in topo.edges}) == topo.m


def test_ba_tiny():
    topo = ba_topology(2, 1, make_rng(0))
    assert topo.edges.tolist() == [[0, 1]]
    with pytest.raises(ValueError):
        ba_topology(3, 3, make_rng(0))


def test_attach_bernoulli_constant():
    topo = gnp_topology(30, 0.3, make_rng(1))
    H = attach_bernoulli(topo, Constant(100.0), Constant(0.5), make_rng(1))
    assert all(e.dist.mean == 50 and e.dist.stddev == 50 for e in H.edges)
    assert validate(H) == []


def test_uniform_weight_mean():
    rng = make_rng(3)
    topo = gnp_topology(6000, 0.005, rng)
    H = attach_bernoulli(topo, UniformRange(0, 1000), UniformRange(0, 1), rng)
    w = np.array([e.dist.weight for e in H.edges])
    se = 1000 / math.sqrt(12) / math.sqrt(w.size)
    assert abs(w.mean() - 500) <= 3 * se
    assert validate(H) == []


def test_gaussian_probs_stay_in_domain():
    rng = make_rng(5)
    topo = gnp_topology(500, 0.05, rng)
    H = attach_bernoulli(topo, GaussianClipped(100, 100 / 6), GaussianClipped(0.5, 1 / 6), rng)
    probs = np.array([e.dist.prob for e in H.edges])
    assert ((probs > 0) & (probs <= 1)).all()
    assert all(e.dist.weight > 0 for e in H.edges)


def test_rejection_keeps_domain_for_wide_sampler():
    vals = GaussianClipped(0.5, 2.0).sample(make_rng(0), 10_000, PROB_DOMAIN)
    assert ((vals > 0) & (vals <= 1)).all()


def test_sampler_own_domain_is_respected():
    s = UniformRange(-1, 1, domain=Interval(0.0, 0.5, lo_closed=True, hi_closed=True))
    vals = s.sample(make_rng(0), 1000)
    assert ((vals >= 0) & (vals <= 0.5)).all()


def test_impossible_domain_raises():
    with pytest.raises(ValueError):
        Constant(2.0).sample(make_rng(0), 3, PROB_DOMAIN)


def test_attach_gaussian_variance_bound():
    rng = make_rng(6)
    topo = gnp_topology(400, 0.05, rng)
    H = attach_gaussian(topo, GaussianClipped(100, 100 / 6), UniformRange(0, 100), rng)
    assert all(0 <= e.dist.stddev <= 10 for e in H.edges)
    means = np.array([e.dist.mean for e in H.edges])
    se = (100 / 6) / math.sqrt(means.size)
    assert abs(means.mean() - 100) <= 3 * se
    assert validate(H) == []


def test_attach_gaussian_constant_is_homogeneous():
    topo = gnp_topology(20, 0.5, make_rng(0))
    H = attach_gaussian(topo, Constant(3.0), Constant(4.0), make_rng(0))
    assert {(e.dist.mean, e.dist.variance) for e in H.edges} == {(3.0, 4.0)}


@pytest.mark.parametrize("model", ["gnp", "ba"])
def test_reproducible_bytes(model):
    def build(seed):
        rng = make_rng(seed)
        topo = gnp_topology(200, 0.05, rng) if model == "gnp" else ba_topology(200, 3, rng)
        return dump_hypergraph(attach_bernoulli(topo, UniformRange(0, 1000), UniformRange(0, 1), rng))

    assert build(9) == build(9)
    assert build(9) != build(10)


def test_replicate_seeds():
    seeds = replicate_seeds(123)
    assert len(seeds) == 4 and len(set(seeds)) == 4
    assert seeds == replicate_seeds(123)
    assert replicate_seeds(123, 2) == seeds[:2]


def test_parse_sampler():
    assert parse_sampler("uniform:0:1000") == UniformRange(0.0, 1000.0)
    assert parse_sampler("gauss:0.5:0.25") == GaussianClipped(0.5, 0.25)
    assert parse_sampler("const:3") == Constant(3.0)
    for bad in ("uniform:0", "beta:1:2", "const:x"):
        with pytest.raises(ValueError):
            parse_sampler(bad)
