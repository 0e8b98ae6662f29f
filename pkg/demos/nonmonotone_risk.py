"""
Prefix matchings do not get riskier as the prefix grows.

On this square, adding the third edge by ratio lets the matcher swap the
risky (A,B) for two calmer edges, so the risk drops from 0.5 to 0.45.
This is why the solver searches for a crossing index instead of a threshold.
"""
from brmatch import ExactGraphMatcher, RiskMeasure, filter_and_order, matching_risk, solve_brmwm
from brmatch.fixtures import nonmonotone_square
from brmatch.matchers import PrefixFamily, exact_graph_matching
from brmatch.oracle import brute_force_brmwm

H = nonmonotone_square()
STD = RiskMeasure.STD

order = filter_and_order(H, 10.0, STD)
family = PrefixFamily(H, order.edge_ids, H.means)
for i in range(1, len(order) + 1):
    m = exact_graph_matching(family.view(i))
    print(f"M({i}) = {m.sorted_ids}  reward={sum(H.means[e] for e in m.sorted_ids):g}  "
          f"risk={matching_risk(H, m, STD)!r}")

# 0.45 is 0.1 + 0.35 up to one ulp, and brute force agrees with the solver
out = solve_brmwm(H, 0.45, STD, ExactGraphMatcher())
best, opt = brute_force_brmwm(H, 0.45, STD)
print(f"B=0.45 solver {out.matching.sorted_ids} -> {out.reward:g}, optimum {best.sorted_ids} -> {opt:g}")
