"""Small hand-built instances used in tests, demos and docs.

Nodes A, B, C, D are numbered 0, 1, 2, 3.
"""

from __future__ import annotations

from brmatch.core import Bernoulli, Moments, UncertainHypergraph

A, B, C, D = 0, 1, 2, 3


def risky_square() -> UncertainHypergraph:
    """Four-cycle where the higher-reward perfect matching is the risky one.

    ``(A,B)`` and ``(C,D)`` pay 100 with probability 1/2; ``(A,C)`` and
    ``(B,D)`` pay 40 surely. Edge ids follow that order.
    """
    return UncertainHypergraph.from_edges(4, [
        ((A, B), Bernoulli(weight=100.0, prob=0.5)),
        ((C, D), Bernoulli(weight=100.0, prob=0.5)),
        ((A, C), Bernoulli(weight=40.0, prob=1.0)),
        ((B, D), Bernoulli(weight=40.0, prob=1.0)),
    ])


def nonmonotone_square() -> UncertainHypergraph:
    """Four-cycle on which prefix-matching risk is not monotone.

    Edges carry ``(mean, stddev)``: ``(A,B)`` = (1.5, 0.5),
    ``(C,D)`` = (0.1, 1), ``(A,C)`` = (1, 0.1), ``(B,D)`` = (1, 0.35).
    """
    return UncertainHypergraph.from_edges(4, [
        ((A, B), Moments(mean=1.5, stddev=0.5)),
        ((C, D), Moments(mean=0.1, stddev=1.0)),
        ((A, C), Moments(mean=1.0, stddev=0.1)),
        ((B, D), Moments(mean=1.0, stddev=0.35)),
    ])
