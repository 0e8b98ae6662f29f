"""
Teams of coauthors as hyperedges.

Each distinct author set is an edge weighted by its total citations; the
success probability is the Jaccard ratio of the members' paper sets, so a
team that rarely works apart counts as reliable.
"""
import io

from brmatch import GreedyMatcher, RiskMeasure, solve_brmwm
from brmatch.ingest import build_coauthor_hypergraph, dump_hypergraph, parse_records
from brmatch.solver import compute_b_max

records = parse_records(io.StringIO("""\
3\tAda;Bo
4\tAda;Bo
10\tAda
7\tAda;Cy
2\tBo
5\tCy;Dee
12\tBo;Cy;Dee
"""))
H, names = build_coauthor_hypergraph(records)
print(dump_hypergraph(H))

for e in H.edges:
    team = "+".join(names[v] for v in e.nodes)
    print(f"{team:<12} citations={e.dist.weight:g}  p={e.dist.prob:.3f}")

b_max = compute_b_max(H, RiskMeasure.STD)
for frac in (0.0, 0.25, 0.55, 0.8, 1.0):
    out = solve_brmwm(H, frac * b_max, RiskMeasure.STD, GreedyMatcher())
    teams = ["+".join(names[v] for v in H.edges[e].nodes) for e in out.matching.sorted_ids]
    print(f"B_n={frac}: {teams}  expected citations {out.reward:.2f}")
