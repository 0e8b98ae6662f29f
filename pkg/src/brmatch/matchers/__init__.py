"""Black-box maximum-weight matching engines."""

from brmatch.matchers.exact import ExactGraphMatcher, UnsupportedInput, exact_graph_matching
from brmatch.matchers.greedy import GreedyMatcher, greedy_matching
from brmatch.matchers.views import MatchingOracle, PrefixFamily, WeightedView, full_view

MATCHERS = {"greedy": GreedyMatcher, "exact": ExactGraphMatcher}


def get_matcher(name: str) -> MatchingOracle:
    try:
        return MATCHERS[name]()
    except KeyError:
        raise ValueError(f"unknown matcher {name!r}; choose from {sorted(MATCHERS)}") from None


__all__ = [
    "ExactGraphMatcher",
    "GreedyMatcher",
    "MatchingOracle",
    "PrefixFamily",
    "UnsupportedInput",
    "WeightedView",
    "exact_graph_matching",
    "full_view",
    "get_matcher",
    "greedy_matching",
]
