"""Command-line front end: ``indpoly <command> ...``.

Exit status: 0 on success, 1 when a verification suite fails, 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .analysis import profile
from .engine import Strategy, brute_force_poly, independence_poly
from .enumeration import MAX_CONNECTED_ORDER, MAX_TREE_ORDER, connected_graphs, connected_graphs_with_nu, free_trees
from .familyspec import parse_family_spec
from .formats import graph6_str, parse_graphs, write_edge_list
from .graph import Graph, GraphError
from .poly import coefficient_list, eval_int, render
from .search import DEFAULT_BUDGET, coverage_table, render_coverage, search
from .verify import SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _read_graphs(source: str, stdin) -> list[Graph]:
    if source == "-":
        text = stdin.read()
    elif os.path.isfile(source):
        with open(source, encoding="ascii") as fh:
            text = fh.read()
    else:
        text = source
    docs = parse_graphs(text)
    if not docs:
        raise UsageError(f"no graph found in {source!r}")
    return [d.graph for d in docs]


def _cmd_poly(args, out, stdin) -> int:
    strategy = Strategy(args.strategy)
    for g in _read_graphs(args.input, stdin):
        p, stats = independence_poly(g, strategy)
        out.write(render(p) + "\n")
        out.write(coefficient_list(p) + "\n")
        if args.stats:
            out.write(stats.render() + "\n")
    return EXIT_OK


def _cmd_eval(args, out, stdin) -> int:
    for g in _read_graphs(args.input, stdin):
        p, _ = independence_poly(g)
        out.write(f"{eval_int(p, args.at)}\n")
    return EXIT_OK


def _cmd_oracle(args, out, stdin) -> int:
    for g in _read_graphs(args.input, stdin):
        p = brute_force_poly(g)
        out.write(render(p) + "\n")
        out.write(coefficient_list(p) + "\n")
    return EXIT_OK


def _cmd_props(args, out, stdin) -> int:
    graphs = _read_graphs(args.input, stdin)
    out.write("\n\n".join(profile(g).render() for g in graphs) + "\n")
    return EXIT_OK


def _cmd_construct(args, out, stdin) -> int:
    g = parse_family_spec(args.spec).build()
    if args.out == "g6":
        out.write(graph6_str(g) + "\n")
    else:
        out.write(write_edge_list(g))
    return EXIT_OK


def _cmd_verify(args, out, stdin) -> int:
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports = [run_suite(name, max_n=args.max_n, seed=args.seed, jobs=args.jobs) for name in names]
    for r in reports:
        out.write(r.render() + "\n")
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            for r in reports:
                fh.write(r.to_jsonl())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_search(args, out, stdin) -> int:
    result = search(args.nu, args.target, args.budget, args.seed)
    out.write(result.render() + "\n")
    return EXIT_OK


def _cmd_coverage(args, out, stdin) -> int:
    table = coverage_table(args.nu, args.budget, args.seed)
    out.write(render_coverage(args.nu, table) + "\n")
    return EXIT_OK


def _cmd_enumerate(args, out, stdin) -> int:
    if args.kind == "trees":
        if args.nu not in (None, 0):
            return EXIT_OK
        stream = free_trees(args.n)
    elif args.nu is None:
        stream = connected_graphs(args.n)
    else:
        stream = connected_graphs_with_nu(args.n, args.nu)
    for g in stream:
        out.write(graph6_str(g) + "\n")
    return EXIT_OK


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indpoly",
        description="Exact independence polynomials and the value I(G;-1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    input_help = "file path, literal graph6 string, or '-' for standard input"

    p = sub.add_parser("poly", help="print I(G;x)")
    p.add_argument("input", help=input_help)
    p.add_argument("--strategy", default=Strategy.AUTO.value,
                   choices=[s.value for s in Strategy])
    p.add_argument("--stats", action="store_true", help="print recursion statistics")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("eval", help="print I(G;T) for an integer T")
    p.add_argument("input", help=input_help)
    p.add_argument("--at", type=int, default=-1)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("oracle", help="brute-force I(G;x) (at most 28 vertices)")
    p.add_argument("input", help=input_help)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("props", help="structural profile")
    p.add_argument("input", help=input_help)
    p.set_defaults(func=_cmd_props)

    p = sub.add_parser("construct", help="build a graph from a family specification")
    p.add_argument("spec", help='e.g. "corona(path(5))" or "h3(lchain(2)@5, cycle(4)@0, k=3)"')
    p.add_argument("--out", choices=("g6", "edges"), default="g6")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="run a theorem suite")
    p.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p.add_argument("--max-n", type=_nonneg, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", metavar="FILE", help="write JSON-lines records")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="search for a graph with given nu and I(G;-1)")
    p.add_argument("--nu", type=_nonneg, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--budget", type=_nonneg, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("coverage", help="search every target |q| <= 2^nu")
    p.add_argument("--nu", type=_nonneg, required=True)
    p.add_argument("--budget", type=_nonneg, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_coverage)

    p = sub.add_parser("enumerate", help="graph6 stream of trees or connected graphs")
    p.add_argument("--kind", choices=("trees", "connected"), required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--nu", type=_nonneg, default=None)
    p.set_defaults(func=_cmd_enumerate)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, stdin=None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command == "enumerate":
        limit = MAX_TREE_ORDER if args.kind == "trees" else MAX_CONNECTED_ORDER
        if not 1 <= args.n <= limit:
            sys.stderr.write(f"error: --n must be in 1..{limit}\n")
            return EXIT_USAGE
    if args.command == "verify" and args.jobs < 1:
        sys.stderr.write("error: --jobs must be >= 1\n")
        return EXIT_USAGE
    try:
        return args.func(args, out, stdin)
    except (GraphError, UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
