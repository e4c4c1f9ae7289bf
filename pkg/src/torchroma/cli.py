"""``torchroma`` command line.

Exit codes: 0 ok, 2 bad parameters or format/graph mismatch, 3 solver
budget exhausted, 4 oracle/solver mismatch in ``verify``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from .certificates import verify_coloring
from .chroma_oracle import classify
from .coloring_engine import (STRATEGIES, NotApplicable, best_coloring,
                              constructive_coloring, _solver_strategy)
from .export import FORMATS, ExportError
from .lattice_canon import canonical_form, class_record, enumerate_order, normal_circuit_lengths
from .solver import DEFAULT_TIME_LIMIT, BudgetExceeded, SolveBudget
from .sweep import verify_sweep
from .torus_graph import InvalidParams, LoopError, TorusParams, build_graph, classify_edges, vertex_of

EXIT_OK = 0
EXIT_BAD_PARAMS = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _emit(obj, args) -> None:
    indent = 2 if args.pretty else None
    print(json.dumps(obj, indent=indent))


def _params(args) -> TorusParams:
    try:
        return TorusParams(args.r, args.s, args.t)
    except InvalidParams as exc:
        raise CliError(EXIT_BAD_PARAMS, str(exc)) from None


def _budget(args) -> SolveBudget:
    base = SolveBudget.default()
    nodes = args.budget if args.budget is not None else base.node_limit
    seconds = args.time_limit if args.time_limit is not None else base.time_limit
    try:
        return SolveBudget(nodes, seconds)
    except ValueError as exc:
        raise CliError(EXIT_BAD_PARAMS, str(exc)) from None


def cmd_info(args) -> int:
    p = _params(args)
    g = build_graph(p)
    report = classify_edges(g)
    _emit({
        "r": p.r, "s": p.s, "t": p.t, "n": p.n,
        "simple": report.is_simple,
        "has_loops": report.has_loops,
        "has_parallel_edges": report.has_parallel_edges,
        "loop_vertices": [list(v) for v in report.loop_vertices],
        "circuits": list(normal_circuit_lengths(p).as_tuple()),
        "canonical": list(canonical_form(p).as_tuple()),
    }, args)
    return EXIT_OK


def cmd_classify(args) -> int:
    _emit(classify(_params(args)).to_json(), args)
    return EXIT_OK


def _forced(p: TorusParams, name: str, budget: SolveBudget):
    if name == "exact-solver":
        return _solver_strategy(p, budget)
    c = constructive_coloring(p, max_colors=7, budget=budget, only=name)
    if c is None:
        raise CliError(EXIT_BAD_PARAMS, f"strategy {name} does not apply to {p}")
    return c


def cmd_color(args) -> int:
    p = _params(args)
    budget = _budget(args)
    t0 = time.perf_counter()
    try:
        if args.strategy:
            c = _forced(p, args.strategy, budget)
        else:
            _, c = best_coloring(p, budget)
    except LoopError as exc:
        raise CliError(EXIT_BAD_PARAMS, str(exc)) from None
    except BudgetExceeded as exc:
        raise CliError(EXIT_BUDGET, str(exc)) from None
    if args.check and not verify_coloring(build_graph(p), c):
        raise AssertionError(f"certificate for {p} failed re-verification")
    elapsed = time.perf_counter() - t0
    if args.format == "grid":
        print(f"# {p} k={c.k} strategy={c.strategy}")
        print(c.render())
    else:
        out = c.to_json()
        out["verified"] = True
        out["seconds"] = round(elapsed, 4)
        _emit(out, args)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n < 1:
        raise CliError(EXIT_BAD_PARAMS, "n must be positive")
    _emit([class_record(p) for p in enumerate_order(args.n)], args)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n < 1:
        raise CliError(EXIT_BAD_PARAMS, "--max-n must be positive")
    try:
        report = verify_sweep(args.max_n, _budget(args), jobs=args.jobs)
    except BudgetExceeded as exc:
        raise CliError(EXIT_BUDGET, str(exc)) from None
    print(report.table())
    bad = report.mismatches
    print(f"classes: {len(report.results)}  mismatches: {len(bad)}")
    for c in bad:
        print(f"MISMATCH {c.params}: oracle {c.oracle}, solver {c.exact}")
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_export(args) -> int:
    p = _params(args)
    try:
        text = FORMATS[args.format](build_graph(p), simplify=args.simplify)
    except (ExportError, LoopError) as exc:
        raise CliError(EXIT_BAD_PARAMS, str(exc)) from None
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_triple(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("-r", type=int, required=True, help="number of columns")
    sp.add_argument("-s", type=int, required=True, help="number of rows")
    sp.add_argument("-t", type=int, required=True, help="shift at the column seam")


def _add_budget(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--budget", type=int, default=None,
                    help="solver node limit (default: $TORCHROMA_BUDGET_NODES or 2e8)")
    sp.add_argument("--time-limit", type=float, default=None,
                    help=f"solver seconds per decision (default {DEFAULT_TIME_LIMIT:g})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="torchroma",
                                 description="Chromatic numbers of 6-regular torus triangulations.")
    ap.add_argument("--pretty", action="store_true", help="indent JSON output")
    # --pretty may be given before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="indent JSON output")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("info", parents=[common], help="size, edge report, circuits, canonical form")
    _add_triple(sp)
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("classify", parents=[common], help="chromatic number from the classification")
    _add_triple(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("color", parents=[common], help="verified optimal colouring")
    _add_triple(sp)
    _add_budget(sp)
    sp.add_argument("--format", choices=("json", "grid"), default="json")
    sp.add_argument("--check", action="store_true", help="re-verify before printing")
    sp.add_argument("--strategy", choices=sorted(STRATEGIES),
                    help="force one construction instead of the optimal cascade")
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("enumerate", parents=[common], help="canonical classes of order n")
    sp.add_argument("-n", type=int, required=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", parents=[common], help="classification vs exact solver for orders <= N")
    sp.add_argument("--max-n", type=int, required=True)
    _add_budget(sp)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", parents=[common], help="write the graph as DOT, DIMACS or JSON")
    _add_triple(sp)
    sp.add_argument("--format", choices=sorted(FORMATS), default="json")
    sp.add_argument("--simplify", action="store_true", help="collapse parallel edges")
    sp.add_argument("-o", "--output", help="output file (default stdout)")
    sp.set_defaults(func=cmd_export)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"torchroma: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
