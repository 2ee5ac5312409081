"""Cross-check tables against the reference oracles; seeded random graph families."""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass, field

from . import oracle
from .graph import Graph
from .projection import BuildLimits, build_projection
from .query import UNREACHABLE, distance, enumerate_shortest_paths, shortest_path
from .table import build_table, validate


@dataclass
class SourceReport:
    source: int
    ok: bool = True
    problem: str = ""


@dataclass
class VerifyReport:
    sources: list[SourceReport] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.ok for r in self.sources)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.sources)

    def first_failure(self) -> SourceReport | None:
        return next((r for r in self.sources if not r.ok), None)

    def extend(self, other: VerifyReport) -> None:
        self.sources.extend(other.sources)


def random_graph(rng: random.Random, n: int, density: float, directed: bool) -> Graph:
    """Erdos-Renyi style graph on vertices ``1..n``; every vertex is declared."""
    g = Graph(directed=directed)
    for v in range(1, n + 1):
        g.add_vertex(v)
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u == v or (not directed and v < u):
                continue
            if rng.random() < density:
                g.add_edge(u, v)
    return g


def random_family(
    seed: int,
    count: int,
    *,
    n_range: tuple[int, int] = (1, 40),
    density_range: tuple[float, float] = (0.05, 0.5),
) -> Iterable[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(*n_range)
        density = rng.uniform(*density_range)
        yield random_graph(rng, n, density, directed=rng.random() < 0.5)


def check_source(
    g: Graph,
    s: int,
    *,
    limits: BuildLimits | None = None,
    exhaustive_max_n: int = oracle.MAX_EXHAUSTIVE_VERTICES,
) -> SourceReport:
    """All oracle checks for one source; stops at the first disagreement."""
    report = SourceReport(s)

    def fail(msg: str) -> SourceReport:
        report.ok = False
        report.problem = f"source {s}: {msg}"
        return report

    proj = build_projection(g, s, limits)
    if proj.truncated:
        return fail(f"projection truncated at level {proj.l_full}")
    tbl = build_table(proj)
    try:
        validate(tbl, g)
    except Exception as exc:  # report the invariant, keep checking other sources
        return fail(str(exc))
    dist = oracle.bfs_distances(g, s)
    ecc = oracle.eccentricity(g, s)
    if proj.l_full != ecc:
        return fail(f"l_full={proj.l_full} but eccentricity={ecc}")
    if tbl.rows > oracle.diameter(g) + 1:
        return fail(f"{tbl.rows} rows exceed diameter + 1")
    for t in g.vertices:
        got = distance(tbl, t)
        want = dist.get(t, UNREACHABLE)
        if got != want:
            return fail(f"distance to {t}: table {got!r}, BFS {want!r}")
        if got is UNREACHABLE:
            continue
        path, stats = shortest_path(tbl, t)
        if path.source != s or path.target != t or path.length != got:
            return fail(f"path to {t} is {path.vertices}, expected length {got}")
        if not path.is_simple() or not path.is_valid_in(g):
            return fail(f"path to {t} is not a simple path of the graph: {path.vertices}")
        if stats.cells_touched != got + 1:
            return fail(f"path to {t} touched {stats.cells_touched} cells, expected {got + 1}")
        if g.n <= exhaustive_max_n:
            listed = {p.vertices for p in enumerate_shortest_paths(tbl, t, limit=10**9)}
            brute = oracle.all_simple_paths(g, s, t, got, max_vertices=exhaustive_max_n)
            if listed != brute:
                return fail(f"shortest paths to {t}: table {sorted(listed)}, brute force {sorted(brute)}")
    return report


def verify_graph(
    g: Graph,
    sources: Iterable[int] | None = None,
    *,
    limits: BuildLimits | None = None,
) -> VerifyReport:
    report = VerifyReport()
    for s in g.vertices if sources is None else sources:
        report.sources.append(check_source(g, s, limits=limits))
    return report


def verify_random(seed: int, count: int, *, sampled_sources: int = 4) -> VerifyReport:
    """Random family check: all sources when n <= 12, a seeded sample otherwise."""
    rng = random.Random(seed ^ 0x5EED)
    report = VerifyReport()
    for g in random_family(seed, count):
        sources = g.vertices
        if g.n > oracle.MAX_EXHAUSTIVE_VERTICES:
            sources = sorted(rng.sample(sources, sampled_sources))
        report.extend(verify_graph(g, sources))
    return report
