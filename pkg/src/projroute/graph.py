"""Dynamic unweighted graph store.

Vertices are positive integers; 0 is reserved. Adjacency lists are kept
sorted ascending so every traversal built on top of the store is
deterministic.
"""

from __future__ import annotations

import bisect
import copy
import enum
from collections.abc import Iterable, Iterator

from .errors import ParseError, ProjRouteError, ReservedId, SelfLoop, UnknownVertex


class Status(str, enum.Enum):
    ADDED = "added"
    REMOVED = "removed"
    UNCHANGED = "unchanged"
    ABSENT = "absent"
    REORDERED = "reordered"

    def __str__(self) -> str:
        return self.value


class FrozenGraph(ProjRouteError):
    """Mutation attempted on a snapshot."""


def check_vertex_id(v: int) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise TypeError(f"vertex id must be an int, got {v!r}")
    if v < 1:
        raise ReservedId(f"vertex id {v} is reserved; ids start at 1")
    return v


class Graph:
    """Unweighted directed or undirected graph with a version counter.

    ``version`` strictly increases on every mutation that changes the
    vertex or edge set. :meth:`snapshot` hands out an immutable copy that
    later mutations never touch.
    """

    def __init__(self, directed: bool = False):
        self.directed = bool(directed)
        self.version = 0
        self._adj: dict[int, list[int]] = {}
        self._frozen = False

    # -- inspection -----------------------------------------------------

    @property
    def vertices(self) -> list[int]:
        return sorted(self._adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        arcs = sum(len(a) for a in self._adj.values())
        return arcs if self.directed else arcs // 2

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"<Graph {kind} n={self.n} m={self.m} version={self.version}>"

    def neighbors(self, v: int) -> list[int]:
        """Out-neighbors of ``v`` in ascending order (a copy)."""
        try:
            return list(self._adj[v])
        except KeyError:
            raise UnknownVertex(f"vertex {v} is not in the graph") from None

    def has_edge(self, u: int, v: int) -> bool:
        adj = self._adj.get(u)
        if adj is None:
            return False
        i = bisect.bisect_left(adj, v)
        return i < len(adj) and adj[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Canonical edges: arcs for directed graphs, ``u < v`` pairs otherwise."""
        for u in sorted(self._adj):
            for v in self._adj[u]:
                if self.directed or u < v:
                    yield (u, v)

    def arcs(self) -> Iterator[tuple[int, int]]:
        """Every ordered adjacency entry, both directions for undirected graphs."""
        for u in sorted(self._adj):
            for v in self._adj[u]:
                yield (u, v)

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        return {u: tuple(self._adj[u]) for u in sorted(self._adj)}

    # -- mutation -------------------------------------------------------

    def _check_mutable(self) -> None:
        if self._frozen:
            raise FrozenGraph("graph snapshots are immutable")

    def add_vertex(self, v: int) -> Status:
        self._check_mutable()
        check_vertex_id(v)
        if v in self._adj:
            return Status.UNCHANGED
        self._adj[v] = []
        self.version += 1
        return Status.ADDED

    def add_edge(self, u: int, v: int) -> Status:
        self._check_mutable()
        check_vertex_id(u)
        check_vertex_id(v)
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u} is not allowed")
        changed = False
        for a in (u, v):
            if a not in self._adj:
                self._adj[a] = []
                changed = True
        changed |= _insert(self._adj[u], v)
        if not self.directed:
            changed |= _insert(self._adj[v], u)
        if not changed:
            return Status.UNCHANGED
        self.version += 1
        return Status.ADDED

    def remove_edge(self, u: int, v: int) -> Status:
        """Remove ``u -> v`` (both directions when undirected). Endpoints stay."""
        self._check_mutable()
        if not self.has_edge(u, v):
            return Status.ABSENT
        self._adj[u].remove(v)
        if not self.directed:
            self._adj[v].remove(u)
        self.version += 1
        return Status.REMOVED

    def snapshot(self) -> Graph:
        if self._frozen:
            return self
        snap = copy.deepcopy(self)
        snap._frozen = True
        return snap

    def copy(self) -> Graph:
        g = copy.deepcopy(self)
        g._frozen = False
        return g

    # -- comparison -----------------------------------------------------

    def same_structure(self, other: Graph) -> bool:
        return self.directed == other.directed and self._adj == other._adj


def _insert(adj: list[int], v: int) -> bool:
    i = bisect.bisect_left(adj, v)
    if i < len(adj) and adj[i] == v:
        return False
    adj.insert(i, v)
    return True


def new_graph(directed: bool = False) -> Graph:
    return Graph(directed)


def from_edges(edges: Iterable[tuple[int, int]], directed: bool = False) -> Graph:
    g = Graph(directed)
    for u, v in edges:
        g.add_edge(u, v)
    return g


# -- edge-list text format -----------------------------------------------


def _parse_id(token: str, lineno: int) -> int:
    if not token.isdigit() or not token.isascii():
        raise ParseError(f"expected a positive decimal integer, got {token!r}", line=lineno)
    value = int(token)
    if value == 0:
        raise ReservedId(f"line {lineno}: vertex id 0 is reserved")
    return value


def load_edge_list(text: str) -> Graph:
    """Parse the ``directed``/``undirected`` edge-list format.

    >>> g = load_edge_list("undirected\\n1 2\\n2 3\\n")
    >>> g.n, g.m
    (3, 2)
    """
    g: Graph | None = None
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if g is None:
            if tokens == ["directed"]:
                g = Graph(directed=True)
            elif tokens == ["undirected"]:
                g = Graph(directed=False)
            else:
                raise ParseError("first line must be 'directed' or 'undirected'", line=lineno)
            continue
        if tokens[0] == "vertex":
            if len(tokens) != 2:
                raise ParseError("expected 'vertex <id>'", line=lineno)
            g.add_vertex(_parse_id(tokens[1], lineno))
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        u, v = (_parse_id(t, lineno) for t in tokens)
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop on vertex {u}")
        g.add_edge(u, v)
    if g is None:
        raise ParseError("missing 'directed'/'undirected' header", line=1)
    return g


def dump_edge_list(g: Graph) -> str:
    """Canonical edge-list text: sorted edges, then isolated vertices."""
    lines = ["directed" if g.directed else "undirected"]
    touched: set[int] = set()
    for u, v in g.edges():
        lines.append(f"{u} {v}")
        touched.update((u, v))
    for v in g.vertices:
        if v not in touched:
            lines.append(f"vertex {v}")
    return "\n".join(lines) + "\n"
