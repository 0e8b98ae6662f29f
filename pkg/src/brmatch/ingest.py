"""Reading and writing uncertain hypergraphs, and building the coauthorship
hypergraph from publication records.

Hypergraph files are UTF-8 text with LF newlines::

    # comment
    uhg 1 <n> <m>
    bern <prob> <weight> <v1> ... <vk>
    gauss <mean> <variance> <v1> ... <vk>
    mom <mean> <stddev> <v1> ... <vk>

Fields are separated by single spaces and node ids are strictly ascending.
Floats are written with ``repr`` so that parsing recovers them exactly.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Iterable, TextIO

from brmatch.core import Bernoulli, Gaussian, Moments, UncertainHypergraph

__all__ = [
    "HypergraphFormatError",
    "PublicationRecord",
    "parse_hypergraph",
    "read_hypergraph",
    "write_hypergraph",
    "dump_hypergraph",
    "save_hypergraph",
    "parse_records",
    "build_coauthor_hypergraph",
]

MAGIC = "uhg"
VERSION = "1"


class HypergraphFormatError(ValueError):
    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


def _float(tok: str, lineno: int, what: str) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise HypergraphFormatError(lineno, f"{what} {tok!r} is not a number") from None
    if not math.isfinite(x):
        raise HypergraphFormatError(lineno, f"{what} {tok!r} is not finite")
    return x


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise HypergraphFormatError(lineno, f"{what} {tok!r} is not an integer") from None


def _dist(kind: str, a: float, b: float, lineno: int):
    if kind == "bern":
        if not 0.0 < a <= 1.0:
            raise HypergraphFormatError(lineno, f"probability {a!r} outside (0, 1]")
        if b < 0.0:
            raise HypergraphFormatError(lineno, f"negative weight {b!r}")
        return Bernoulli(weight=b, prob=a)
    if kind == "gauss":
        if b < 0.0:
            raise HypergraphFormatError(lineno, f"negative variance {b!r}")
        return Gaussian(mean=a, variance=b)
    if b < 0.0:
        raise HypergraphFormatError(lineno, f"negative stddev {b!r}")
    return Moments(mean=a, stddev=b)


def parse_hypergraph(stream: TextIO | Iterable[str]) -> UncertainHypergraph:
    """Parse the text format described in the module docstring.

    Raises:
        HypergraphFormatError: naming the offending line and the reason.
    """
    header: tuple[int, int] | None = None
    edges = []
    lineno = 0
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        toks = line.split(" ")
        if header is None:
            if len(toks) != 4 or toks[0] != MAGIC:
                raise HypergraphFormatError(lineno, "expected header 'uhg 1 <n> <m>'")
            if toks[1] != VERSION:
                raise HypergraphFormatError(lineno, f"unsupported version {toks[1]!r}")
            n = _int(toks[2], lineno, "node count")
            m = _int(toks[3], lineno, "edge count")
            if n < 0 or m < 0:
                raise HypergraphFormatError(lineno, "counts must be non-negative")
            header = (n, m)
            continue
        kind = toks[0]
        if kind not in ("bern", "gauss", "mom"):
            raise HypergraphFormatError(lineno, f"unknown edge kind {kind!r}")
        if len(toks) < 4:
            raise HypergraphFormatError(lineno, "edge needs two parameters and at least one node")
        a = _float(toks[1], lineno, "parameter")
        b = _float(toks[2], lineno, "parameter")
        nodes = [_int(t, lineno, "node") for t in toks[3:]]
        if len(set(nodes)) != len(nodes):
            raise HypergraphFormatError(lineno, "duplicate node in edge")
        if any(x >= y for x, y in zip(nodes, nodes[1:])):
            raise HypergraphFormatError(lineno, "node ids must be ascending")
        n = header[0]
        for v in nodes:
            if not 0 <= v < n:
                raise HypergraphFormatError(lineno, f"node {v} outside [0, {n})")
        edges.append((nodes, _dist(kind, a, b, lineno)))
    if header is None:
        raise HypergraphFormatError(lineno, "missing header")
    if len(edges) != header[1]:
        raise HypergraphFormatError(
            lineno, f"header declares {header[1]} edges but {len(edges)} were read"
        )
    return UncertainHypergraph.from_edges(header[0], edges)


def read_hypergraph(path) -> UncertainHypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh)


def _line(edge) -> str:
    d = edge.dist
    if isinstance(d, Bernoulli):
        head = f"bern {float(d.prob)!r} {float(d.weight)!r}"
    elif isinstance(d, Gaussian):
        head = f"gauss {float(d.mean)!r} {float(d.variance)!r}"
    else:
        head = f"mom {float(d.mean)!r} {float(d.stddev)!r}"
    return head + "".join(f" {v}" for v in sorted(edge.nodes))


def write_hypergraph(hypergraph: UncertainHypergraph, stream: TextIO, comments: Iterable[str] = ()) -> None:
    for c in comments:
        stream.write(f"# {c}\n")
    stream.write(f"{MAGIC} {VERSION} {hypergraph.n} {hypergraph.m}\n")
    for e in hypergraph.edges:
        stream.write(_line(e) + "\n")


def dump_hypergraph(hypergraph: UncertainHypergraph) -> str:
    buf = io.StringIO()
    write_hypergraph(hypergraph, buf)
    return buf.getvalue()


def save_hypergraph(hypergraph: UncertainHypergraph, path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        write_hypergraph(hypergraph, fh, comments)


@dataclass(frozen=True)
class PublicationRecord:
    authors: frozenset[str]
    citations: int

    def __post_init__(self):
        if not self.authors:
            raise ValueError("a publication needs at least one author")
        if self.citations < 0:
            raise ValueError("citation count must be non-negative")


def parse_records(stream: TextIO | Iterable[str]) -> list[PublicationRecord]:
    """Read ``<citations>\\t<author>;<author>;...`` lines (``#`` comments)."""
    records = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        count, sep, names = line.partition("\t")
        if not sep:
            raise HypergraphFormatError(lineno, "expected '<citations>\\t<authors>'")
        cites = _int(count.strip(), lineno, "citation count")
        authors = frozenset(a.strip() for a in names.split(";") if a.strip())
        try:
            records.append(PublicationRecord(authors, cites))
        except ValueError as exc:
            raise HypergraphFormatError(lineno, str(exc)) from None
    return records


def build_coauthor_hypergraph(
    records: Iterable[PublicationRecord],
) -> tuple[UncertainHypergraph, list[str]]:
    """One Bernoulli hyperedge per distinct multi-author team.

    The weight is the team's total citations. The probability is the
    Jaccard ratio of the members' paper sets: papers by all members over
    papers by any member. Paper sets count every record, solo ones
    included. Returns the hypergraph and the node-to-author name table;
    nodes are numbered by sorted author name and edges are sorted by their
    node tuples, so the result does not depend on record order.
    """
    records = list(records)
    papers: dict[str, set[int]] = {}
    for idx, rec in enumerate(records):
        for a in rec.authors:
            papers.setdefault(a, set()).add(idx)
    teams: dict[frozenset[str], int] = {}
    for rec in records:
        if len(rec.authors) > 1:
            teams[rec.authors] = teams.get(rec.authors, 0) + rec.citations

    names = sorted({a for team in teams for a in team})
    node_of = {a: i for i, a in enumerate(names)}
    built = []
    for team, cites in teams.items():
        sets = [papers[a] for a in team]
        together = set.intersection(*sets)
        anyone = set.union(*sets)
        prob = len(together) / len(anyone)
        nodes = tuple(sorted(node_of[a] for a in team))
        built.append((nodes, Bernoulli(weight=float(cites), prob=prob)))
    built.sort(key=lambda item: item[0])
    return UncertainHypergraph.from_edges(len(names), built), names
