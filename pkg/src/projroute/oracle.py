"""Naive reference algorithms used to cross-check projections and tables.

Nothing here shares code with the projection builder or the table walk.
The exhaustive enumerator is size-gated and refuses large graphs.
"""

from __future__ import annotations

import math
from collections import deque

from .errors import OracleSizeError, UnknownVertex
from .graph import Graph

INFINITE = math.inf
MAX_EXHAUSTIVE_VERTICES = 12


def _require(g: Graph, *vs: int) -> None:
    for v in vs:
        if v not in g:
            raise UnknownVertex(f"vertex {v} is not in the graph")


def bfs_distances(g: Graph, s: int) -> dict[int, int]:
    _require(g, s)
    dist = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_simple_paths(
    g: Graph,
    s: int,
    t: int,
    exact_length: int,
    *,
    max_vertices: int = MAX_EXHAUSTIVE_VERTICES,
) -> set[tuple[int, ...]]:
    """Every simple ``s -> t`` path with exactly ``exact_length`` edges, by plain DFS."""
    _require(g, s, t)
    if g.n > max_vertices:
        raise OracleSizeError(f"exhaustive enumeration refused: n={g.n} > {max_vertices}")
    found: set[tuple[int, ...]] = set()

    def extend(path: list[int]) -> None:
        if len(path) - 1 == exact_length:
            if path[-1] == t:
                found.add(tuple(path))
            return
        for w in g.neighbors(path[-1]):
            if w not in path:
                path.append(w)
                extend(path)
                path.pop()

    if exact_length >= 0:
        extend([s])
    return found


def eccentricity(g: Graph, s: int, *, strict: bool = False) -> float:
    """Largest finite BFS distance from ``s``.

    With ``strict`` the result is :data:`INFINITE` as soon as some vertex
    of the graph is unreachable from ``s``.
    """
    dist = bfs_distances(g, s)
    if strict and len(dist) < g.n:
        return INFINITE
    return max(dist.values())


def diameter(g: Graph, *, strict: bool = False) -> float:
    if g.n == 0:
        return 0
    return max(eccentricity(g, s, strict=strict) for s in g.vertices)
