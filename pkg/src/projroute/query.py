"""Distance and shortest-path lookups over a path table.

A lookup reads row 0 once for the distance ``l`` of the target and then
one cell per hop, from level ``l`` down to 1, so a path of length ``l``
costs ``l + 1`` cell reads.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass

from .errors import StaleTable, UnknownVertex, UnreachableError
from .graph import Graph
from .table import PathTable

DEFAULT_LIMIT = 1024


class Unreachable(enum.Enum):
    UNREACHABLE = "unreachable"

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __bool__(self) -> bool:
        return False


UNREACHABLE = Unreachable.UNREACHABLE


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __lt__(self, other: Path) -> bool:
        return self.vertices < other.vertices

    def reversed(self) -> Path:
        return Path(self.vertices[::-1])

    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in zip(self.vertices, self.vertices[1:]))

    def __str__(self) -> str:
        return " ".join(map(str, self.vertices))


@dataclass(frozen=True)
class QueryStats:
    cells_touched: int
    stale: bool = False


def distance(tbl: PathTable, t: int) -> int | Unreachable:
    try:
        levels = tbl.row0[t]
    except KeyError:
        raise UnknownVertex(f"vertex {t} is not in the table of source {tbl.source}") from None
    return levels[0] if levels else UNREACHABLE


def _require_distance(tbl: PathTable, t: int) -> int:
    d = distance(tbl, t)
    if d is UNREACHABLE:
        raise UnreachableError(f"vertex {t} is not reachable from {tbl.source}")
    return d


def shortest_path(tbl: PathTable, t: int, graph: Graph | None = None) -> tuple[Path, QueryStats]:
    """Walk the first entry of each cell from the target back to the source.

    ``graph`` is only consulted to flag a table built from an older version.
    """
    l = _require_distance(tbl, t)
    cells = tbl.cells
    walk = [t]
    v = t
    while l:
        v = cells[(l, v)][0]
        walk.append(v)
        l -= 1
    stale = graph is not None and tbl.is_stale(graph)
    return Path(walk[::-1]), QueryStats(cells_touched=len(walk), stale=stale)


def shortest_path_checked(tbl: PathTable, g: Graph, t: int) -> tuple[Path, QueryStats]:
    """Like :func:`shortest_path`, but every hop must still be an edge of ``g``.

    A dead hop falls through to the next entry of the cell in priority
    order; a cell with no usable entry backtracks one hop. Raises
    :class:`StaleTable` when no stored path survives.
    """
    d = _require_distance(tbl, t)
    touched = 1
    if d == 0:
        return Path((t,)), QueryStats(touched, tbl.is_stale(g))
    cells = tbl.cells
    walk = [t]
    # Per hop: candidate parents and the index of the next one to try.
    choices: list[tuple[tuple[int, ...], int]] = []
    level = d
    while level:
        if len(choices) < len(walk):
            choices.append((cells[(level, walk[-1])], 0))
            touched += 1
        members, i = choices[-1]
        while i < len(members) and not g.has_edge(members[i], walk[-1]):
            i += 1
        if i == len(members):
            choices.pop()
            if not choices:
                raise StaleTable(f"no stored hop into {t} survives in graph version {g.version}")
            walk.pop()
            level += 1
            prev, j = choices[-1]
            choices[-1] = (prev, j + 1)
            continue
        choices[-1] = (members, i)
        walk.append(members[i])
        level -= 1
    return Path(walk[::-1]), QueryStats(touched, tbl.is_stale(g))


def _on_path_vertices(tbl: PathTable, t: int, d: int) -> list[set[int]]:
    # Per level, the vertices lying on at least one shortest source->t path.
    layers = [set() for _ in range(d + 1)]
    layers[d].add(t)
    for l in range(d, 0, -1):
        for v in layers[l]:
            layers[l - 1].update(tbl.cells[(l, v)])
    return layers


def iter_shortest_paths(tbl: PathTable, t: int) -> Iterator[Path]:
    """All shortest source->t paths in lexicographic order, lazily."""
    d = _require_distance(tbl, t)
    layers = _on_path_vertices(tbl, t, d)
    forward: dict[tuple[int, int], list[int]] = {}
    for l in range(1, d + 1):
        for v in layers[l]:
            for u in tbl.cells[(l, v)]:
                forward.setdefault((l - 1, u), []).append(v)
    for succ in forward.values():
        succ.sort()

    prefix = [tbl.source]
    stack: list[Iterator[int]] = []
    if d == 0:
        yield Path(prefix)
        return
    stack.append(iter(forward[(0, tbl.source)]))
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            prefix.pop()
            continue
        prefix.append(nxt)
        if len(prefix) == d + 1:
            yield Path(prefix)
            prefix.pop()
        else:
            stack.append(iter(forward[(len(prefix) - 1, nxt)]))


def enumerate_shortest_paths(tbl: PathTable, t: int, limit: int = DEFAULT_LIMIT) -> list[Path]:
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    out: list[Path] = []
    for path in iter_shortest_paths(tbl, t):
        out.append(path)
        if len(out) == limit:
            break
    return out
