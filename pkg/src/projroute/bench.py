"""Table lookup versus per-query breadth-first search. Reports numbers, asserts nothing."""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass

from .graph import Graph
from .projection import BuildLimits, build_projection
from .query import shortest_path
from .table import build_table


@dataclass
class BenchReport:
    queries: int
    build_seconds: float = 0.0
    mean_cells_touched: float = 0.0
    mean_walk_seconds: float = 0.0
    mean_bfs_seconds: float = 0.0
    bound_ok: bool = True

    def lines(self) -> list[str]:
        if not self.queries:
            return ["queries=0"]
        return [
            f"queries={self.queries}",
            f"build_ms={self.build_seconds * 1e3:.3f}",
            f"mean_cells_touched={self.mean_cells_touched:.6f}",
            f"walk_us={self.mean_walk_seconds * 1e6:.3f}",
            f"bfs_us={self.mean_bfs_seconds * 1e6:.3f}",
            f"cells_touched_eq_dist_plus_1={'true' if self.bound_ok else 'false'}",
        ]


def bfs_path(g: Graph, s: int, t: int) -> list[int] | None:
    """Fresh per-query search, the baseline the table walk is compared with."""
    parent = {s: s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            break
        for w in g.neighbors(u):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if t not in parent:
        return None
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return path[::-1]


def pick_targets(tbl_row0: dict[int, tuple[int, ...]], count: int, seed: int) -> list[int]:
    """Cycle through the reachable vertices in a seeded shuffled order."""
    reachable = sorted(t for t, levels in tbl_row0.items() if levels)
    random.Random(seed).shuffle(reachable)
    return [reachable[i % len(reachable)] for i in range(count)]


def run_bench(
    g: Graph,
    source: int,
    queries: int,
    *,
    seed: int = 0,
    limits: BuildLimits | None = None,
) -> BenchReport:
    report = BenchReport(queries=queries)
    if queries == 0:
        return report
    start = time.perf_counter()
    tbl = build_table(build_projection(g, source, limits), allow_partial=True)
    report.build_seconds = time.perf_counter() - start
    targets = pick_targets(tbl.row0, queries, seed)

    touched = 0
    start = time.perf_counter()
    for t in targets:
        path, stats = shortest_path(tbl, t)
        touched += stats.cells_touched
        report.bound_ok &= stats.cells_touched == path.length + 1
    report.mean_walk_seconds = (time.perf_counter() - start) / queries
    report.mean_cells_touched = touched / queries

    start = time.perf_counter()
    for t in targets:
        bfs_path(g, source, t)
    report.mean_bfs_seconds = (time.perf_counter() - start) / queries
    return report
