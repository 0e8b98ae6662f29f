"""Random uncertain graphs: Erdos-Renyi and Barabasi-Albert topologies with
sampled Bernoulli (weight, probability) or Gaussian (mean, variance) edges.

Randomness comes from ``numpy.random.Generator`` over the PCG64 bit
generator, seeded with a single integer. Every routine consumes the stream
in a fixed order, so a seed fully determines the output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from brmatch.core import Bernoulli, Gaussian, UncertainHypergraph

__all__ = [
    "Interval",
    "UniformRange",
    "GaussianClipped",
    "Constant",
    "Topology",
    "make_rng",
    "replicate_seeds",
    "gnp_topology",
    "ba_topology",
    "attach_bernoulli",
    "attach_gaussian",
    "parse_sampler",
    "WEIGHT_DOMAIN",
    "PROB_DOMAIN",
    "VARIANCE_DOMAIN",
    "REAL_DOMAIN",
]


@dataclass(frozen=True)
class Interval:
    lo: float = -math.inf
    hi: float = math.inf
    lo_closed: bool = False
    hi_closed: bool = False

    def contains(self, x: np.ndarray) -> np.ndarray:
        lo_ok = x >= self.lo if self.lo_closed else x > self.lo
        hi_ok = x <= self.hi if self.hi_closed else x < self.hi
        return lo_ok & hi_ok & np.isfinite(x)

    def intersect(self, other: Interval | None) -> Interval:
        if other is None:
            return self
        if self.lo > other.lo or (self.lo == other.lo and not self.lo_closed):
            lo, lo_c = self.lo, self.lo_closed
        else:
            lo, lo_c = other.lo, other.lo_closed
        if self.hi < other.hi or (self.hi == other.hi and not self.hi_closed):
            hi, hi_c = self.hi, self.hi_closed
        else:
            hi, hi_c = other.hi, other.hi_closed
        return Interval(lo, hi, lo_c, hi_c)


WEIGHT_DOMAIN = Interval(0.0, math.inf)
PROB_DOMAIN = Interval(0.0, 1.0, hi_closed=True)
VARIANCE_DOMAIN = Interval(0.0, math.inf, lo_closed=True)
REAL_DOMAIN = Interval()

_MAX_ROUNDS = 1000


class _Sampler:
    domain: Interval | None = None

    def _raw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        raise NotImplementedError

    def sample(
        self, rng: np.random.Generator, size: int, domain: Interval | None = None
    ) -> np.ndarray:
        """Draw ``size`` values, redrawing any that fall outside the domain.

        The effective domain is the sampler's own intersected with
        ``domain`` (the role the values will play).
        """
        dom = (domain or REAL_DOMAIN).intersect(self.domain)
        out = self._raw(rng, size)
        bad = ~dom.contains(out)
        rounds = 0
        while bad.any():
            rounds += 1
            if rounds > _MAX_ROUNDS:
                raise ValueError(f"{self!r} cannot produce values in {dom}")
            idx = np.flatnonzero(bad)
            out[idx] = self._raw(rng, idx.size)
            bad[idx] = ~dom.contains(out[idx])
        return out


@dataclass(frozen=True)
class UniformRange(_Sampler):
    lo: float
    hi: float
    domain: Interval | None = None

    def _raw(self, rng, size):
        return rng.uniform(self.lo, self.hi, size)


@dataclass(frozen=True)
class GaussianClipped(_Sampler):
    """Normal draws restricted to a domain by rejection (not by clamping)."""

    mu: float
    sigma: float
    domain: Interval | None = None

    def _raw(self, rng, size):
        return rng.normal(self.mu, self.sigma, size)


@dataclass(frozen=True)
class Constant(_Sampler):
    value: float
    domain: Interval | None = None

    def _raw(self, rng, size):
        return np.full(size, float(self.value))


def parse_sampler(text: str) -> _Sampler:
    """Parse ``uniform:LO:HI``, ``gauss:MU:SIGMA`` or ``const:VALUE``."""
    kind, *args = text.split(":")
    try:
        vals = [float(a) for a in args]
    except ValueError:
        raise ValueError(f"bad sampler {text!r}: non-numeric parameter") from None
    if kind == "uniform" and len(vals) == 2:
        return UniformRange(*vals)
    if kind in ("gauss", "normal") and len(vals) == 2:
        return GaussianClipped(*vals)
    if kind == "const" and len(vals) == 1:
        return Constant(vals[0])
    raise ValueError(f"bad sampler {text!r}; expected uniform:LO:HI, gauss:MU:SIGMA or const:V")


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def replicate_seeds(master: int, count: int = 4) -> list[int]:
    """Independent child seeds for repeated runs of one configuration."""
    children = np.random.SeedSequence(master).spawn(count)
    return [int(c.generate_state(1, np.uint64)[0]) for c in children]


@dataclass(frozen=True)
class Topology:
    """``edges`` is an ``(m, 2)`` int array of pairs ``u < v``, sorted."""

    n: int
    edges: np.ndarray

    @property
    def m(self) -> int:
        return int(self.edges.shape[0])


def _pairs_from_linear(n: int, idx: np.ndarray) -> np.ndarray:
    # row i of the strict upper triangle starts at i*(2n-i-1)/2
    rows = np.arange(n, dtype=np.int64)
    starts = rows * (2 * n - rows - 1) // 2
    i = np.searchsorted(starts, idx, side="right") - 1
    j = idx - starts[i] + i + 1
    return np.stack([i, j], axis=1)


def gnp_topology(n: int, p: float, rng: np.random.Generator) -> Topology:
    """G(n, p): each unordered pair independently with probability ``p``.

    Pairs are visited in row-major order and selected by geometric skips,
    so the cost is proportional to the number of edges drawn.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    total = n * (n - 1) // 2
    if p == 0.0 or total == 0:
        return Topology(n, np.empty((0, 2), dtype=np.int64))
    if p == 1.0:
        iu, ju = np.triu_indices(n, 1)
        return Topology(n, np.stack([iu, ju], axis=1).astype(np.int64))
    chunk = int(total * p + 6 * math.sqrt(total * p) + 64)
    picks = []
    last = -1
    while True:
        gaps = rng.geometric(p, chunk)
        pos = last + np.cumsum(gaps)
        picks.append(pos[pos < total])
        if pos[-1] >= total:
            break
        last = int(pos[-1])
    idx = np.concatenate(picks)
    return Topology(n, _pairs_from_linear(n, idx))


def ba_topology(n: int, m_attach: int, rng: np.random.Generator) -> Topology:
    """Barabasi-Albert growth from a complete seed graph on ``m_attach + 1``
    nodes; each later node links to ``m_attach`` distinct earlier nodes
    drawn with probability proportional to their degree."""
    if not n > m_attach >= 1:
        raise ValueError("need n > m_attach >= 1")
    seed = m_attach + 1
    n_edges = seed * (seed - 1) // 2 + m_attach * (n - seed)
    edges = np.empty((n_edges, 2), dtype=np.int64)
    # every edge endpoint appears once, so uniform draws are degree-biased
    pool = np.empty(2 * n_edges, dtype=np.int64)
    k = 0
    for u in range(seed):
        for v in range(u + 1, seed):
            edges[k] = (u, v)
            pool[2 * k] = u
            pool[2 * k + 1] = v
            k += 1
    for new in range(seed, n):
        chosen: list[int] = []
        taken = set()
        filled = 2 * k
        while len(chosen) < m_attach:
            draws = rng.integers(0, filled, m_attach - len(chosen))
            for d in draws:
                t = int(pool[d])
                if t not in taken:
                    taken.add(t)
                    chosen.append(t)
        for t in chosen:
            edges[k] = (t, new)
            pool[2 * k] = t
            pool[2 * k + 1] = new
            k += 1
    order = np.lexsort((edges[:, 1], edges[:, 0]))
    return Topology(n, edges[order])


def attach_bernoulli(
    topology: Topology,
    weight_sampler: _Sampler,
    prob_sampler: _Sampler,
    rng: np.random.Generator,
) -> UncertainHypergraph:
    """Weighted Bernoulli edges: all weights are drawn first, then all
    probabilities, each in edge order."""
    weights = weight_sampler.sample(rng, topology.m, WEIGHT_DOMAIN)
    probs = prob_sampler.sample(rng, topology.m, PROB_DOMAIN)
    return UncertainHypergraph.from_edges(
        topology.n,
        (((int(u), int(v)), Bernoulli(weight=float(w), prob=float(p)))
         for (u, v), w, p in zip(topology.edges, weights, probs)),
    )


def attach_gaussian(
    topology: Topology,
    mean_sampler: _Sampler,
    var_sampler: _Sampler,
    rng: np.random.Generator,
) -> UncertainHypergraph:
    """Gaussian edges: all means first, then all variances."""
    means = mean_sampler.sample(rng, topology.m, REAL_DOMAIN)
    variances = var_sampler.sample(rng, topology.m, VARIANCE_DOMAIN)
    return UncertainHypergraph.from_edges(
        topology.n,
        (((int(u), int(v)), Gaussian(mean=float(mu), variance=float(var)))
         for (u, v), mu, var in zip(topology.edges, means, variances)),
    )
