"""
The four-node square where the richest matching is also the riskiest.

Two coin-flip edges pay 100 each with probability 1/2; two sure edges pay 40.
With a generous bound the solver takes the gamble, with a tight one it
settles for the certain 80.
"""
from brmatch import ExactGraphMatcher, RiskMeasure, filter_and_order, solve_brmwm
from brmatch.fixtures import risky_square

H = risky_square()
names = "ABCD"

for e in H.edges:
    print(f"edge {e.id}: {names[e.nodes[0]]}{names[e.nodes[1]]}  "
          f"mean={e.dist.mean:g}  stddev={e.dist.stddev:g}")

order = filter_and_order(H, 100.0, RiskMeasure.STD)
print("ratio order:", [names[H.edges[e].nodes[0]] + names[H.edges[e].nodes[1]] for e in order.edge_ids])

for bound in (100.0, 50.0, 0.0):
    out = solve_brmwm(H, bound, RiskMeasure.STD, ExactGraphMatcher())
    print(f"B={bound:>5}: edges {out.matching.sorted_ids}  reward={out.reward:g}  "
          f"risk={out.risk:g}  l*={out.ell_star}  calls={out.matcher_calls}")
