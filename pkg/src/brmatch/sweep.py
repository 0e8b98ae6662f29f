"""Normalized-risk sweeps producing one CSV row per grid point."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields

from brmatch.core import RiskMeasure, UncertainHypergraph
from brmatch.matchers import get_matcher
from brmatch.solver import compute_b_max, solve_brmwm

DEFAULT_GRID = tuple(i / 20 for i in range(21))


@dataclass(frozen=True)
class SweepConfig:
    measure: RiskMeasure = RiskMeasure.STD
    matcher: str = "greedy"
    grid: tuple[float, ...] = DEFAULT_GRID
    jobs: int = 1
    timing: bool = True

    def __post_init__(self):
        if any(not 0.0 <= g <= 1.0 for g in self.grid):
            raise ValueError("grid values must lie in [0, 1]")
        if any(a >= b for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError("grid must be strictly increasing")


@dataclass(frozen=True)
class SweepRow:
    B_n: float
    B: float
    expected_reward: float
    risk: float
    avg_probability: float | None
    num_edges: int
    ell_star: int | None
    fallback_used: bool
    runtime_ms: float | None


FIELDNAMES = [f.name for f in fields(SweepRow)]


def _solve_point(hypergraph, normalized, b_max, config: SweepConfig) -> SweepRow:
    budget = normalized * b_max
    out = solve_brmwm(hypergraph, budget, config.measure, get_matcher(config.matcher))
    avg_p = None
    if hypergraph.is_bernoulli() and len(out.matching) > 0:
        probs = [hypergraph.edges[e].dist.prob for e in out.matching.sorted_ids]
        avg_p = sum(probs) / len(probs)
    return SweepRow(
        B_n=normalized,
        B=budget,
        expected_reward=out.reward,
        risk=out.risk,
        avg_probability=avg_p,
        num_edges=len(out.matching),
        ell_star=out.ell_star,
        fallback_used=out.fallback_used,
        runtime_ms=out.elapsed * 1000.0 if config.timing else None,
    )


def run_sweep(hypergraph: UncertainHypergraph, config: SweepConfig = SweepConfig()) -> list[SweepRow]:
    """Solve at ``B = B_n * B_max`` for every ``B_n`` in the grid.

    ``B_max`` comes from the greedy risk-weighted matching, so ``B_n = 1``
    is not a certificate of unconstrained optimality. Rows come back in
    grid order whatever ``config.jobs`` is.
    """
    b_max = compute_b_max(hypergraph, config.measure)
    if config.jobs <= 1:
        return [_solve_point(hypergraph, g, b_max, config) for g in config.grid]
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        futures = [pool.submit(_solve_point, hypergraph, g, b_max, config) for g in config.grid]
        return [f.result() for f in futures]


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_rows(rows: list[SweepRow], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(FIELDNAMES)
    for row in rows:
        writer.writerow([_cell(v) for v in astuple(row)])


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    write_rows(rows, buf)
    return buf.getvalue()


def read_rows(stream) -> list[dict[str, str]]:
    return list(csv.DictReader(stream))


__all__ = [
    "DEFAULT_GRID",
    "FIELDNAMES",
    "SweepConfig",
    "SweepRow",
    "run_sweep",
    "write_rows",
    "rows_to_csv",
    "read_rows",
]
