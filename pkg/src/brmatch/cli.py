"""Command-line entry point: ``brmatch <solve|sweep|gen|ingest-coauthors|oracle>``.

Exit status is 0 on success, 1 on a usage error and 2 on a data error.
"""

from __future__ import annotations

import argparse
import json
import sys

from brmatch.core import ContractViolation, RiskMeasure, matching_risk
from brmatch.generators import (
    attach_bernoulli,
    attach_gaussian,
    ba_topology,
    gnp_topology,
    make_rng,
    parse_sampler,
    replicate_seeds,
)
from brmatch.ingest import (
    HypergraphFormatError,
    build_coauthor_hypergraph,
    parse_records,
    read_hypergraph,
    save_hypergraph,
    write_hypergraph,
)
from brmatch.matchers import UnsupportedInput, get_matcher
from brmatch.oracle import BudgetExceeded, EnumerationBudget, brute_force_brmwm
from brmatch.solver import compute_b_max, solve_brmwm
from brmatch.sweep import DEFAULT_GRID, SweepConfig, run_sweep, write_rows

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _measure(text: str) -> RiskMeasure:
    return RiskMeasure(text)


def _grid(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}") from None


def _load(path):
    try:
        return read_hypergraph(path)
    except FileNotFoundError:
        raise FileNotFoundError(f"input file not found: {path}") from None


def _budget(args, hypergraph) -> tuple[float, float | None]:
    if args.risk_bound is not None:
        if args.risk_bound < 0:
            raise UsageError("--risk-bound must be non-negative")
        return args.risk_bound, None
    if not 0.0 <= args.normalized_risk <= 1.0:
        raise UsageError("--normalized-risk must lie in [0, 1]")
    b_max = compute_b_max(hypergraph, args.measure)
    return args.normalized_risk * b_max, b_max


def _emit(text: str, path) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_solve(args) -> int:
    hypergraph = _load(args.input)
    budget, b_max = _budget(args, hypergraph)
    out = solve_brmwm(hypergraph, budget, args.measure, get_matcher(args.matcher))
    ids = out.matching.sorted_ids
    print("matching:", " ".join(map(str, ids)))
    print(f"reward: {out.reward!r}")
    print(f"risk: {out.risk!r}")
    print(f"budget: {budget!r}")
    if b_max is not None:
        print(f"b_max: {b_max!r}")
    print(f"ell_star: {'' if out.ell_star is None else out.ell_star}")
    print(f"fallback_used: {str(out.fallback_used).lower()}")
    print(f"matcher_calls: {out.matcher_calls}")
    if args.output:
        report = {
            "matching": ids,
            "reward": out.reward,
            "risk": out.risk,
            "budget": budget,
            "b_max": b_max,
            "ell_star": out.ell_star,
            "fallback_used": out.fallback_used,
            "matcher_calls": out.matcher_calls,
            "measure": args.measure.value,
            "matcher": args.matcher,
        }
        _emit(json.dumps(report, indent=2) + "\n", args.output)
    return EXIT_OK


def cmd_sweep(args) -> int:
    hypergraph = _load(args.input)
    try:
        config = SweepConfig(
            measure=args.measure,
            matcher=args.matcher,
            grid=args.grid,
            jobs=args.jobs,
            timing=not args.no_timing,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = run_sweep(hypergraph, config)
    if args.output in (None, "-"):
        write_rows(rows, sys.stdout)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            write_rows(rows, fh)
    return EXIT_OK


def cmd_gen(args) -> int:
    seed = args.seed
    if args.replicate is not None:
        if args.replicate < 0:
            raise UsageError("--replicate must be non-negative")
        seed = replicate_seeds(args.seed, args.replicate + 1)[args.replicate]
    rng = make_rng(seed)
    try:
        if args.model == "gnp":
            topo = gnp_topology(args.n, args.p, rng)
        else:
            topo = ba_topology(args.n, args.m_attach, rng)
        if args.kind == "bern":
            hypergraph = attach_bernoulli(
                topo, parse_sampler(args.weights), parse_sampler(args.probs), rng)
        else:
            hypergraph = attach_gaussian(
                topo, parse_sampler(args.means), parse_sampler(args.variances), rng)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.model == "gnp":
        desc = f"gnp n={args.n} p={args.p!r}"
    else:
        desc = f"ba n={args.n} m_attach={args.m_attach}"
    if args.kind == "bern":
        desc += f" weights={args.weights} probs={args.probs}"
    else:
        desc += f" means={args.means} variances={args.variances}"
    comments = [desc + f" seed={args.seed}" + (
        f" replicate={args.replicate}" if args.replicate is not None else "")]
    if args.output in (None, "-"):
        write_hypergraph(hypergraph, sys.stdout, comments)
    else:
        save_hypergraph(hypergraph, args.output, comments)
    return EXIT_OK


def cmd_ingest_coauthors(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            records = parse_records(fh)
    except FileNotFoundError:
        raise FileNotFoundError(f"input file not found: {args.input}") from None
    hypergraph, names = build_coauthor_hypergraph(records)
    save_hypergraph(hypergraph, args.output, [f"coauthorship hypergraph from {len(records)} records"])
    if args.names:
        _emit("".join(f"{i}\t{name}\n" for i, name in enumerate(names)), args.names)
    print(f"nodes: {hypergraph.n}")
    print(f"edges: {hypergraph.m}")
    print(f"rank: {hypergraph.rank}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    hypergraph = _load(args.input)
    budget, _ = _budget(args, hypergraph)
    limits = EnumerationBudget(max_edges=args.max_edges)
    matching, reward = brute_force_brmwm(hypergraph, budget, args.measure, limits)
    print("matching:", " ".join(map(str, matching.sorted_ids)))
    print(f"reward: {reward!r}")
    print(f"risk: {matching_risk(hypergraph, matching, args.measure)!r}")
    print(f"budget: {budget!r}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="brmatch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def shared(p, matcher=True):
        p.add_argument("--input", required=True, help="hypergraph file")
        p.add_argument("--output", help="output path (default: stdout)")
        p.add_argument("--measure", type=_measure, default=RiskMeasure.STD,
                       choices=list(RiskMeasure), metavar="{std,var}")
        if matcher:
            p.add_argument("--matcher", choices=["greedy", "exact"], default="greedy")

    def budget_flags(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--risk-bound", type=float, help="absolute risk bound B")
        g.add_argument("--normalized-risk", type=float,
                       help="B_n in [0, 1]; B = B_n * B_max (B_max is the greedy "
                            "risk-weighted matching's risk, an approximation)")

    p = sub.add_parser("solve", help="solve one bounded-risk instance")
    shared(p)
    budget_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="solve across a normalized-risk grid, emit CSV")
    shared(p)
    p.add_argument("--grid", type=_grid, default=DEFAULT_GRID,
                   help="comma-separated B_n values (default 0, 0.05, ..., 1)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--no-timing", action="store_true",
                   help="leave runtime_ms empty so output is reproducible byte for byte")
    p.add_argument("--seed", type=int, default=None, help="accepted for symmetry; unused")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="generate a random uncertain graph")
    p.add_argument("--model", choices=["gnp", "ba"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, help="edge probability (gnp)")
    p.add_argument("--m-attach", type=int, help="edges per new node (ba)")
    p.add_argument("--kind", choices=["bern", "gauss"], default="bern")
    p.add_argument("--weights", default="uniform:0:1000")
    p.add_argument("--probs", default="uniform:0:1")
    p.add_argument("--means", default="uniform:0:1000")
    p.add_argument("--variances", default="uniform:0:100")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--replicate", type=int, help="use the i-th seed derived from --seed")
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("ingest-coauthors", help="build the coauthorship hypergraph")
    p.add_argument("--input", required=True, help="records: '<citations>\\t<a>;<b>;...'")
    p.add_argument("--output", required=True, help="hypergraph file to write")
    p.add_argument("--names", help="write the node-to-author table here")
    p.set_defaults(func=cmd_ingest_coauthors)

    p = sub.add_parser("oracle", help="exact optimum by enumeration (small inputs)")
    shared(p, matcher=False)
    budget_flags(p)
    p.add_argument("--max-edges", type=int, default=EnumerationBudget().max_edges)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen":
        if args.model == "gnp" and args.p is None:
            parser.error("gen --model gnp needs --p")
        if args.model == "ba" and args.m_attach is None:
            parser.error("gen --model ba needs --m-attach")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"brmatch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"brmatch: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (HypergraphFormatError, ContractViolation, UnsupportedInput, BudgetExceeded) as exc:
        print(f"brmatch: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
