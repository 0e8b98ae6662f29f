import io
import random

import pytest
from hypothesis import given, strategies as st

from brmatch import Bernoulli, Gaussian, Moments, UncertainHypergraph
from brmatch.fixtures import nonmonotone_square, risky_square
from brmatch.generators import UniformRange, attach_bernoulli, gnp_topology, make_rng
from brmatch.ingest import (
    HypergraphFormatError,
    PublicationRecord,
    build_coauthor_hypergraph,
    dump_hypergraph,
    parse_hypergraph,
    parse_records,
)

# Papers 1..6; P_A = {1,2,3,4}, P_B = {1,2,5}, P_C = {4,6}, P_D = {6}
SIX_RECORDS = """\
# citations<TAB>authors
3\tA;B
4\tA;B
10\tA
7\tA;C
2\tB
5\tC;D
"""


def parse(text):
    return parse_hypergraph(io.StringIO(text))


def test_parse_bernoulli_line():
    H = parse("uhg 1 2 1\nbern 0.5 100 0 1\n")
    assert H.edges[0].nodes == (0, 1)
    assert H.edges[0].dist == Bernoulli(weight=100.0, prob=0.5)


def test_parse_gaussian_hyperedge():
    H = parse("uhg 1 8 1\ngauss 100 278 2 5 7\n")
    assert H.edges[0].nodes == (2, 5, 7)
    assert H.edges[0].dist == Gaussian(mean=100.0, variance=278.0)
    assert H.rank == 3


def test_parse_moments_and_comments():
    H = parse("# hello\nuhg 1 3 1\n\n# mid\nmom 1.5 0.5 0 2\n")
    assert H.edges[0].dist == Moments(1.5, 0.5)


@pytest.mark.parametrize("text,needle,line", [
    ("uhg 1 2 1\nbern 1.5 40 0 0\n", "duplicate", 2),
    ("uhg 1 2 1\nbern 1.5 40 0 1\n", "probability", 2),
    ("uhg 1 2 1\nbern 0 40 0 1\n", "probability", 2),
    ("uhg 1 2 1\ngauss 1 -2 0 1\n", "variance", 2),
    ("uhg 1 2 1\nmom 1 -2 0 1\n", "stddev", 2),
    ("uhg 1 2 1\nbern 0.5 40 0 2\n", "node 2", 2),
    ("uhg 1 3 1\nbern 0.5 40 2 1\n", "ascending", 2),
    ("uhg 1 2 1\nfoo 0.5 40 0 1\n", "kind", 2),
    ("uhg 1 2 1\nbern x 40 0 1\n", "number", 2),
    ("uhg 1 2 1\nbern 0.5 40\n", "at least one node", 2),
    ("uhg 1 2 2\nbern 0.5 40 0 1\n", "declares 2", 2),
    ("bern 0.5 40 0 1\n", "header", 1),
    ("uhg 2 2 0\n", "version", 1),
    ("", "missing header", 0),
])
def test_parse_errors(text, needle, line):
    with pytest.raises(HypergraphFormatError) as info:
        parse(text)
    assert needle in str(info.value)
    assert info.value.lineno == line


def test_roundtrip_figures():
    for H in (risky_square(), nonmonotone_square()):
        text = dump_hypergraph(H)
        assert parse(text) == H
        assert dump_hypergraph(parse(text)) == text


def test_empty_graph_is_header_only():
    assert dump_hypergraph(UncertainHypergraph(0)) == "uhg 1 0 0\n"
    assert parse("uhg 1 0 0\n") == UncertainHypergraph(0)


def test_generated_graph_roundtrip():
    rng = make_rng(21)
    H = attach_bernoulli(gnp_topology(300, 0.05, rng), UniformRange(0, 1000), UniformRange(0, 1), rng)
    text = dump_hypergraph(H)
    assert dump_hypergraph(parse(text)) == text
    assert parse(text) == H


finite = st.floats(allow_nan=False, allow_infinity=False, width=64)


@given(st.lists(st.tuples(
    st.sampled_from(["bern", "gauss", "mom"]),
    st.floats(1e-300, 1.0), finite.map(abs), finite,
    st.sets(st.integers(0, 9), min_size=1, max_size=4)), max_size=8))
def test_roundtrip_exact(rows):
    edges = []
    for kind, p, nonneg, real, nodes in rows:
        if kind == "bern":
            d = Bernoulli(weight=nonneg, prob=p)
        elif kind == "gauss":
            d = Gaussian(mean=real, variance=nonneg)
        else:
            d = Moments(mean=real, stddev=nonneg)
        edges.append((sorted(nodes), d))
    H = UncertainHypergraph.from_edges(10, edges)
    assert parse(dump_hypergraph(H)) == H


def test_parse_records():
    recs = parse_records(io.StringIO(SIX_RECORDS))
    assert len(recs) == 6
    assert recs[0] == PublicationRecord(frozenset({"A", "B"}), 3)
    with pytest.raises(HypergraphFormatError):
        parse_records(io.StringIO("3 A;B\n"))
    with pytest.raises(HypergraphFormatError):
        parse_records(io.StringIO("3\t;\n"))


def test_six_record_fixture():
    H, names = build_coauthor_hypergraph(parse_records(io.StringIO(SIX_RECORDS)))
    assert names == ["A", "B", "C", "D"]
    got = {tuple(names[v] for v in e.nodes): (e.dist.weight, e.dist.prob) for e in H.edges}
    assert got == {
        ("A", "B"): (7.0, 2 / 5),
        ("A", "C"): (7.0, 1 / 5),
        ("C", "D"): (5.0, 1 / 2),
    }


def test_single_author_records_give_no_edge():
    H, names = build_coauthor_hypergraph([PublicationRecord(frozenset({"X"}), 50)])
    assert H.m == 0 and names == []


def test_identical_teams_merge():
    recs = [PublicationRecord(frozenset({"A1", "A2"}), c) for c in (3, 4, 5)]
    recs.append(PublicationRecord(frozenset({"A1", "A2", "A3"}), 100))
    H, names = build_coauthor_hypergraph(recs)
    by_team = {tuple(names[v] for v in e.nodes): e.dist for e in H.edges}
    assert by_team[("A1", "A2")].weight == 12
    assert by_team[("A1", "A2", "A3")].weight == 100
    assert H.rank == 3


def test_probability_one_iff_same_paper_sets():
    same = [PublicationRecord(frozenset({"A", "B"}), 1), PublicationRecord(frozenset({"A", "B"}), 2)]
    H, _ = build_coauthor_hypergraph(same)
    assert H.edges[0].dist.prob == 1.0
    H, _ = build_coauthor_hypergraph(same + [PublicationRecord(frozenset({"A"}), 0)])
    assert H.edges[0].dist.prob < 1.0


def test_zero_citation_team_is_kept():
    H, _ = build_coauthor_hypergraph([PublicationRecord(frozenset({"A", "B"}), 0)])
    assert H.m == 1 and H.edges[0].dist.mean == 0
    assert parse(dump_hypergraph(H)) == H


def test_merge_is_order_independent():
    recs = parse_records(io.StringIO(SIX_RECORDS))
    base = dump_hypergraph(build_coauthor_hypergraph(recs)[0])
    rng = random.Random(0)
    for _ in range(10):
        rng.shuffle(recs)
        assert dump_hypergraph(build_coauthor_hypergraph(recs)[0]) == base


@given(st.lists(st.tuples(st.sets(st.sampled_from("ABCDEF"), min_size=1, max_size=4), st.integers(0, 50)), max_size=15))
def test_probabilities_lie_in_unit_interval(rows):
    recs = [PublicationRecord(frozenset(a), c) for a, c in rows]
    H, _ = build_coauthor_hypergraph(recs)
    for e in H.edges:
        assert 0 < e.dist.prob <= 1
    sizes = [len(r.authors) for r in recs if len(r.authors) > 1]
    assert H.rank == max(sizes, default=0)
