"""``projroute`` command line: project, build, query, dump, verify, bench.

Exit status is 0 on success, 1 on domain errors (unknown vertex,
unreachable target, stale table, truncated projection, failed
verification) and 2 on usage or input-format errors.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path as FsPath

from .bench import run_bench
from .errors import (
    InvariantViolation,
    ParseError,
    ProjRouteError,
    ReservedId,
    SelfLoop,
    StaleTable,
    TruncatedProjection,
    UnknownVertex,
    UnreachableError,
)
from .graph import Graph, load_edge_list
from .projection import DEFAULT_MAX_LEVEL, DEFAULT_MAX_OCCURRENCES, BuildLimits, Mode, build_projection, to_bracket
from .query import DEFAULT_LIMIT, UNREACHABLE, distance, enumerate_shortest_paths, shortest_path, shortest_path_checked
from .table import PathTable, build_table, dump_table, load_table, serialize_table
from .verify import verify_graph, verify_random

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return FsPath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _graph(path: str) -> Graph:
    try:
        return load_edge_list(_read(path))
    except (ParseError, ReservedId, SelfLoop) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _table(path: str) -> PathTable:
    try:
        return load_table(_read(path))
    except (ParseError, InvariantViolation) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _limits(args: argparse.Namespace) -> BuildLimits:
    return BuildLimits(max_level=args.max_level, max_occurrences_per_level=args.max_occ, mode=Mode(args.mode))


def _add_build_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--source", required=True, type=_positive)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.FULL.value)
    p.add_argument("--max-level", type=_positive, default=DEFAULT_MAX_LEVEL)
    p.add_argument("--max-occ", type=_positive, default=DEFAULT_MAX_OCCURRENCES)


def cmd_project(args: argparse.Namespace) -> int:
    proj = build_projection(_graph(args.graph), args.source, _limits(args))
    print(to_bracket(proj))
    print(f"lfull={proj.l_full} truncated={str(proj.truncated).lower()}")
    return EXIT_OK


def cmd_build(args: argparse.Namespace) -> int:
    proj = build_projection(_graph(args.graph), args.source, _limits(args))
    tbl = build_table(proj, allow_partial=args.allow_partial)
    FsPath(args.out).write_text(serialize_table(tbl), encoding="utf-8")
    st = tbl.stats()
    print(f"rows={st['rows']} cells={st['cells']} entries={st['entries']}")
    return EXIT_OK


def cmd_query(args: argparse.Namespace) -> int:
    tbl = _table(args.table)
    d = distance(tbl, args.target)
    if d is UNREACHABLE:
        print("dist=unreachable")
        print(f"vertex {args.target} is not reachable from {tbl.source}", file=sys.stderr)
        return EXIT_DOMAIN
    print(f"dist={d}")
    if args.all:
        for path in enumerate_shortest_paths(tbl, args.target, args.limit):
            print(path)
        return EXIT_OK
    if args.graph:
        g = _graph(args.graph)
        path, stats = shortest_path_checked(tbl, g, args.target)
        if stats.stale:
            print(f"table built from graph version {tbl.graph_version}, graph is at {g.version}", file=sys.stderr)
    else:
        path, stats = shortest_path(tbl, args.target)
    print(path)
    return EXIT_OK


def cmd_dump(args: argparse.Namespace) -> int:
    sys.stdout.write(dump_table(_table(args.table)))
    return EXIT_OK


def _sources(spec: str, g: Graph) -> list[int]:
    if spec == "all":
        return g.vertices
    try:
        return [int(part) for part in spec.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"--sources expects 'all' or a comma-separated id list, got {spec!r}") from None


def cmd_verify(args: argparse.Namespace) -> int:
    if args.graph is None and args.random is None:
        raise UsageError("verify needs --graph FILE and/or --random M")
    reports = []
    if args.graph is not None:
        g = _graph(args.graph)
        reports.append(verify_graph(g, _sources(args.sources, g)))
    if args.random is not None:
        reports.append(verify_random(args.seed, args.random))
    failed = False
    for report in reports:
        print(f"{report.passed}/{len(report.sources)} sources ok")
        bad = report.first_failure()
        if bad is not None:
            failed = True
            print(bad.problem)
    return EXIT_DOMAIN if failed else EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    g = _graph(args.graph)
    if args.source not in g:
        raise UnknownVertex(f"source vertex {args.source} is not in the graph")
    report = run_bench(g, args.source, args.queries, seed=args.seed)
    print("\n".join(report.lines()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="projroute", description="Shortest paths from graph projections.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("project", help="print the bracket form of a projection")
    _add_build_flags(p)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("build", help="compile a path table and write it as .ptab")
    _add_build_flags(p)
    p.add_argument("--out", required=True)
    p.add_argument("--allow-partial", action="store_true", help="accept a truncated projection")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="distance and shortest path(s) to a target")
    p.add_argument("--table", required=True)
    p.add_argument("--target", required=True, type=_positive)
    p.add_argument("--all", action="store_true", help="list every shortest path")
    p.add_argument("--limit", type=_positive, default=DEFAULT_LIMIT)
    p.add_argument("--graph", help="validate hops against this live graph")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("dump", help="print a table in tab-separated layout")
    p.add_argument("--table", required=True)
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("verify", help="cross-check tables against BFS and brute force")
    p.add_argument("--graph")
    p.add_argument("--sources", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=_non_negative)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="table walk versus per-query BFS")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", required=True, type=_positive)
    p.add_argument("--queries", required=True, type=_non_negative)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnknownVertex, UnreachableError, StaleTable, TruncatedProjection) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ProjRouteError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
