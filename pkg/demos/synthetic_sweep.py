"""
Risk versus reward on a random uncertain graph.

Builds a seeded G(n, p) graph with uniform weights and success
probabilities, then sweeps the normalized bound B_n from 0 to 1. Pass
``--full`` for the 6000-node, ~90k-edge instance (about half a minute).
"""
import sys
import time

from brmatch import RiskMeasure
from brmatch.generators import UniformRange, attach_bernoulli, gnp_topology, make_rng
from brmatch.sweep import SweepConfig, run_sweep

n, p = (6000, 0.005) if "--full" in sys.argv else (1500, 0.005)
rng = make_rng(0)
H = attach_bernoulli(gnp_topology(n, p, rng), UniformRange(0, 1000), UniformRange(0, 1), rng)
print(f"G({n}, {p}): {H.m} edges")

t0 = time.perf_counter()
rows = run_sweep(H, SweepConfig(measure=RiskMeasure.STD, matcher="greedy"))
print(f"{len(rows)} points in {time.perf_counter() - t0:.1f} s\n")

print(f"{'B_n':>5} {'reward':>12} {'risk':>12} {'edges':>6} {'avg p':>6}")
for r in rows:
    print(f"{r.B_n:5.2f} {r.expected_reward:12.1f} {r.risk:12.1f} {r.num_edges:6d} {r.avg_probability or 0:6.3f}")
