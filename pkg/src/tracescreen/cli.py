"""Command-line interface.

Subcommands:

    stats <file>            counter table (N, C, X, T and timings)
    check <file>            per-record traceability verdict lines
    gen cactus|connected|all  write generated records to stdout
    oracle <file>           exact decision per record (n <= 24)

Exit codes: 0 success, 1 parse error in the input file, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import sys
from typing import IO

from .blocks import decompose
from .cactus import cactus_traceable, is_cactus
from .conditions import (
    REASON_BLOCK_ARTICULATIONS,
    REASON_CRITICALITY,
    REASON_DISCONNECTED,
    REASON_EMPTY,
    REASON_LEAF_COMPONENTS,
    ScreenVerdict,
    screen,
)
from .gdbio import GraphRecord, ParseError, format_record, parse_stream
from .generate import (
    InvalidParamError,
    all_labeled_graphs,
    gen_cactus,
    gen_connected,
)
from .graph import is_connected
from .oracle import MAX_ORACLE_VERTICES, exact_traceable
from .stats import run_stats, run_stats_parallel


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracescreen",
        description="Hamiltonian-path screening for graph databases",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="dataset counters and timings")
    p_stats.add_argument("file")
    p_stats.add_argument("--lenient", action="store_true",
                         help="skip malformed records instead of failing")
    p_stats.add_argument("--parallel", type=int, metavar="K", default=0,
                         help="evaluate records with K worker processes")

    p_check = sub.add_parser("check", help="per-record verdicts")
    p_check.add_argument("file")
    p_check.add_argument("--id", dest="record_id", default=None,
                         help="only the record with this id")
    p_check.add_argument("--oracle-max", type=int, default=0, metavar="N",
                         help="resolve inconclusive records exactly "
                              "when they have at most N vertices")
    p_check.add_argument("--lenient", action="store_true")

    p_gen = sub.add_parser("gen", help="write generated graphs to stdout")
    p_gen.add_argument("kind", choices=["cactus", "connected", "all"])
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--cycle-fraction", type=float, default=0.5)
    p_gen.add_argument("--m", type=int, default=None,
                       help="edge count (connected kind)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--count", type=int, default=1,
                       help="number of graphs; record i uses seed+i")

    p_oracle = sub.add_parser("oracle", help="exact decisions (n <= 24)")
    p_oracle.add_argument("file")
    p_oracle.add_argument("--id", dest="record_id", default=None)
    p_oracle.add_argument("--lenient", action="store_true")
    return parser


def _describe(verdict: ScreenVerdict) -> str:
    reason = verdict.reason
    if reason == REASON_EMPTY:
        return "empty"
    if reason == REASON_DISCONNECTED:
        return "disconnected"
    if reason == REASON_CRITICALITY:
        return f"criticality vertex={verdict.subject} value={verdict.value}"
    if reason == REASON_BLOCK_ARTICULATIONS:
        return (f"block_articulations block={verdict.subject} "
                f"value={verdict.value}")
    if reason == REASON_LEAF_COMPONENTS:
        return f"leaf_components value={verdict.value}"
    raise AssertionError(f"unknown reason {reason!r}")


def _path_str(path) -> str:
    return "path=" + ",".join(str(v) for v in path)


def _check_line(rec: GraphRecord, oracle_max: int) -> str:
    g = rec.graph
    n = g.vertex_count
    if n == 0 or not is_connected(g):
        verdict = screen(g)
        return f"{rec.id}\tNOT_TRACEABLE\t{_describe(verdict)}"
    if n == 1:
        return f"{rec.id}\tTRACEABLE\t{_path_str((0,))}"
    d = decompose(g)
    verdict = screen(g, decomposition=d)
    if verdict.ruled_out:
        return f"{rec.id}\tNOT_TRACEABLE\t{_describe(verdict)}"
    if is_cactus(g, d):
        decision = cactus_traceable(g, d)
        if decision.traceable:
            return f"{rec.id}\tTRACEABLE\t{_path_str(decision.witness_path)}"
        return f"{rec.id}\tNOT_TRACEABLE\t{decision.failed_condition}"
    if n <= oracle_max:
        result = exact_traceable(g)
        if result.traceable:
            return f"{rec.id}\tTRACEABLE\t{_path_str(result.witness_path)}"
        return f"{rec.id}\tNOT_TRACEABLE\texhaustive_search"
    return f"{rec.id}\tINCONCLUSIVE"


def _cmd_stats(args, out: IO[str]) -> int:
    if args.parallel < 0:
        raise InvalidParamError(f"--parallel must be >= 0, got {args.parallel}")
    with open(args.file, "r", encoding="utf-8") as handle:
        if args.parallel > 0:
            stats = run_stats_parallel(
                handle, args.parallel, lenient=args.lenient
            )
        else:
            stats = run_stats(parse_stream(handle, lenient=args.lenient))
    out.write(stats.format_table() + "\n")
    return 0


def _cmd_check(args, out: IO[str]) -> int:
    with open(args.file, "r", encoding="utf-8") as handle:
        for rec in parse_stream(handle, lenient=args.lenient):
            if args.record_id is not None and rec.id != args.record_id:
                continue
            out.write(_check_line(rec, args.oracle_max) + "\n")
    return 0


def _cmd_gen(args, out: IO[str]) -> int:
    if args.n < 1:
        raise InvalidParamError(f"need --n >= 1, got {args.n}")
    if args.kind == "cactus":
        for i in range(args.count):
            graph = gen_cactus(args.n, args.cycle_fraction, args.seed + i)
            out.write(format_record(str(i), graph))
    elif args.kind == "connected":
        if args.m is None:
            raise InvalidParamError("connected kind needs --m")
        for i in range(args.count):
            graph = gen_connected(args.n, args.m, args.seed + i)
            out.write(format_record(str(i), graph))
    else:
        for i, graph in enumerate(all_labeled_graphs(args.n)):
            out.write(format_record(str(i), graph))
    return 0


def _cmd_oracle(args, out: IO[str]) -> int:
    with open(args.file, "r", encoding="utf-8") as handle:
        for rec in parse_stream(handle, lenient=args.lenient):
            if args.record_id is not None and rec.id != args.record_id:
                continue
            n = rec.graph.vertex_count
            if n == 0:
                out.write(f"{rec.id}\tNOT_TRACEABLE\tempty\n")
                continue
            if n > MAX_ORACLE_VERTICES:
                out.write(f"{rec.id}\tSKIPPED\ttoo_large n={n}\n")
                continue
            result = exact_traceable(rec.graph)
            if result.traceable:
                out.write(
                    f"{rec.id}\tTRACEABLE\t{_path_str(result.witness_path)}\n"
                )
            else:
                out.write(f"{rec.id}\tNOT_TRACEABLE\texhaustive_search\n")
    return 0


def cli_main(argv=None, out: IO[str] | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code else 0
    try:
        if args.command == "stats":
            return _cmd_stats(args, out)
        if args.command == "check":
            return _cmd_check(args, out)
        if args.command == "gen":
            return _cmd_gen(args, out)
        if args.command == "oracle":
            return _cmd_oracle(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except InvalidParamError as exc:
        print(f"bad arguments: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"bad arguments: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


def main() -> None:
    sys.exit(cli_main())
