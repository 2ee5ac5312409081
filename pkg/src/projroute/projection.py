"""Graph projections: layered simple-path expansions rooted at a vantage vertex.

A projection of ``g`` from ``s`` is a tree. Level 0 holds ``s``; the
children of an occurrence are its out-neighbors that are not already on
the root-to-occurrence path, in ascending order. Expansion runs level by
level and stops once the whole level at which every reachable vertex has
been listed is finished; that level index is ``l_full``.

The bracket form prints a node as its id followed by its parenthesised,
comma-separated children, e.g. ``3(2(7),4(1,6),5)``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass, field

from .errors import InvariantViolation, ParseError, UnknownVertex
from .graph import Graph

DEFAULT_MAX_LEVEL = 64
DEFAULT_MAX_OCCURRENCES = 1_000_000


class Mode(str, enum.Enum):
    FULL = "full"
    SHORTEST_ONLY = "shortest-only"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BuildLimits:
    max_level: int | None = DEFAULT_MAX_LEVEL
    max_occurrences_per_level: int | None = DEFAULT_MAX_OCCURRENCES
    mode: Mode = Mode.FULL

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", Mode(self.mode))
        for name in ("max_level", "max_occurrences_per_level"):
            cap = getattr(self, name)
            if cap is not None and cap < 1:
                raise ValueError(f"{name} must be >= 1, got {cap}")


@dataclass(frozen=True, slots=True)
class ProjectionNode:
    vertex: int
    children: tuple[ProjectionNode, ...] = ()


@dataclass(frozen=True)
class Projection:
    source: int
    root: ProjectionNode
    l_full: int
    truncated: bool = False
    mode: Mode = field(default=Mode.FULL, compare=False)
    # Provenance, carried into path tables; not part of the tree's identity.
    directed: bool = field(default=False, compare=False)
    graph_version: int = field(default=0, compare=False)
    universe: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not self.universe:
            object.__setattr__(self, "universe", tuple(sorted(_tree_vertices(self.root))))

    def levels(self) -> list[list[tuple[int, int | None]]]:
        """Occurrences per level as ``(vertex, parent_vertex)`` pairs, in tree order."""
        out: list[list[tuple[int, int | None]]] = [[(self.root.vertex, None)]]
        frontier = [self.root]
        while True:
            nxt: list[ProjectionNode] = []
            level: list[tuple[int, int | None]] = []
            for node in frontier:
                for child in node.children:
                    level.append((child.vertex, node.vertex))
                    nxt.append(child)
            if not nxt:
                return out
            out.append(level)
            frontier = nxt

    def occurrence_count(self) -> int:
        return sum(len(level) for level in self.levels())

    def __str__(self) -> str:
        return to_bracket(self)


def _tree_vertices(root: ProjectionNode) -> set[int]:
    found = set()
    stack = [root]
    while stack:
        node = stack.pop()
        found.add(node.vertex)
        stack.extend(node.children)
    return found


def _reachable(g: Graph, s: int) -> set[int]:
    seen = {s}
    stack = [s]
    adj = g._adj
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def build_projection(g: Graph, s: int, limits: BuildLimits | None = None) -> Projection:
    """Expand the projection of ``g`` from vantage vertex ``s``.

    If a cap in ``limits`` fires, the last complete level is kept, the
    offending level is dropped and the result is flagged ``truncated``.
    """
    if s not in g:
        raise UnknownVertex(f"source vertex {s} is not in the graph")
    limits = limits or BuildLimits()
    shortest = limits.mode is Mode.SHORTEST_ONLY
    adj = g._adj
    bit = {v: 1 << i for i, v in enumerate(sorted(adj))}
    target = len(_reachable(g, s))

    # Per level: vertex ids, parent index into the previous level, ancestor masks.
    level_vertices: list[list[int]] = [[s]]
    level_parents: list[list[int]] = [[-1]]
    masks = [bit[s]]
    expandable = [True]
    seen = {s}
    truncated = False

    while len(seen) < target:
        depth = len(level_vertices)
        if limits.max_level is not None and depth > limits.max_level:
            truncated = True
            break
        verts: list[int] = []
        parents: list[int] = []
        new_masks: list[int] = []
        for i, x in enumerate(level_vertices[-1]):
            if not expandable[i]:
                continue
            mask = masks[i]
            for w in adj[x]:
                if mask & bit[w]:
                    continue
                if shortest and w in seen:
                    continue
                verts.append(w)
                parents.append(i)
                new_masks.append(mask | bit[w])
        cap = limits.max_occurrences_per_level
        if cap is not None and len(verts) > cap:
            truncated = True
            break
        if not verts:
            break
        if shortest:
            first: set[int] = set()
            expandable = []
            for w in verts:
                expandable.append(w not in first)
                first.add(w)
        else:
            expandable = [True] * len(verts)
        seen.update(verts)
        level_vertices.append(verts)
        level_parents.append(parents)
        masks = new_masks

    root = _assemble(level_vertices, level_parents)
    return Projection(
        source=s,
        root=root,
        l_full=len(level_vertices) - 1,
        truncated=truncated,
        mode=limits.mode,
        directed=g.directed,
        graph_version=g.version,
        universe=tuple(sorted(adj)),
    )


def _assemble(level_vertices: list[list[int]], level_parents: list[list[int]]) -> ProjectionNode:
    # Bottom-up so nodes can be immutable; children stay in expansion (ascending) order.
    below: list[ProjectionNode] = []
    below_parents: list[int] = []
    for depth in range(len(level_vertices) - 1, -1, -1):
        kids: list[list[ProjectionNode]] = [[] for _ in level_vertices[depth]]
        for node, p in zip(below, below_parents):
            kids[p].append(node)
        below = [ProjectionNode(v, tuple(k)) for v, k in zip(level_vertices[depth], kids)]
        below_parents = level_parents[depth]
    return below[0]


# -- bracket text ----------------------------------------------------------


def to_bracket(p: Projection | ProjectionNode) -> str:
    root = p.root if isinstance(p, Projection) else p
    out: list[str] = []
    # Stack items are nodes to print or literal closing/separator strings.
    stack: list[ProjectionNode | str] = [root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        out.append(str(item.vertex))
        if item.children:
            out.append("(")
            stack.append(")")
            for i in range(len(item.children) - 1, -1, -1):
                stack.append(item.children[i])
                if i:
                    stack.append(",")
    return "".join(out)


def _tokens(text: str) -> Iterator[tuple[str, str, int]]:
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "(),^":
            yield c, c, i
            i += 1
        elif c.isdigit() and c.isascii():
            j = i
            while j < n and text[j].isdigit() and text[j].isascii():
                j += 1
            yield "id", text[i:j], i
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", position=i)
    yield "end", "", n


def parse_bracket(text: str) -> Projection:
    """Parse bracket text into a projection; ``^(`` is accepted for ``(``.

    >>> to_bracket(parse_bracket("1^(2^(3), 4)"))
    '1(2(3),4)'
    """
    toks = list(_tokens(text))
    pos = 0

    def take(*kinds: str) -> tuple[str, str, int]:
        nonlocal pos
        kind, value, at = toks[pos]
        if kind not in kinds:
            shown = value or "end of input"
            raise ParseError(f"expected {' or '.join(kinds)}, got {shown!r}", position=at)
        pos += 1
        return toks[pos - 1]

    # Each frame: vertex, collected children.
    stack: list[tuple[int, list[ProjectionNode]]] = []
    on_path: set[int] = set()
    depth = 0
    done: ProjectionNode | None = None
    while True:
        _, value, at = take("id")
        vertex = int(value)
        if vertex == 0:
            raise ParseError("vertex id 0 is reserved", position=at)
        if vertex in on_path:
            raise InvariantViolation(f"vertex {vertex} at position {at} repeats an ancestor")
        kind = toks[pos][0]
        if kind in ("^", "("):
            if kind == "^":
                take("^")
            take("(")
            stack.append((vertex, []))
            on_path.add(vertex)
            depth = max(depth, len(stack))
            continue
        node = ProjectionNode(vertex)
        # Close as many frames as the closing parens allow.
        while True:
            if not stack:
                done = node
                break
            _, siblings = stack[-1]
            siblings.append(node)
            kind, _, at = take(",", ")")
            if kind == ",":
                break
            parent, kids = stack.pop()
            on_path.discard(parent)
            seen_kids = {k.vertex for k in kids}
            if len(seen_kids) != len(kids):
                raise InvariantViolation(f"vertex {parent} has duplicate children")
            kids.sort(key=lambda k: k.vertex)
            node = ProjectionNode(parent, tuple(kids))
        if done is not None:
            break
    take("end")
    return Projection(source=done.vertex, root=done, l_full=depth, truncated=False)


def implied_edges(p: Projection) -> set[tuple[int, int]]:
    edges: set[tuple[int, int]] = set()
    stack = [p.root]
    while stack:
        node = stack.pop()
        for child in node.children:
            edges.add((node.vertex, child.vertex))
            stack.append(child)
    return edges


def level_sets(p: Projection) -> dict[int, list[int]]:
    """Vertices per level with repetitions, e.g. ``{0: [3], 1: [2, 4, 5], ...}``."""
    return {depth: [v for v, _ in level] for depth, level in enumerate(p.levels())}
