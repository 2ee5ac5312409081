"""Path tables compiled from projections.

Row 0 maps each vertex to the ascending list of levels it occurs at (the
first entry is its distance from the source). Row ``l >= 1`` maps a vertex
``t`` to the vertices that generate occurrences of ``t`` at level ``l``,
kept in a mutable priority order that defaults to ascending ids.
"""

from __future__ import annotations

import threading
from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import (
    InvariantViolation,
    LevelOutOfRange,
    NotAPermutation,
    ParseError,
    TruncatedProjection,
    UnknownVertex,
)
from .graph import Graph, Status
from .projection import Projection


@dataclass(eq=False)
class PathTable:
    source: int
    directed: bool
    graph_version: int
    l_full: int
    row0: dict[int, tuple[int, ...]]
    cells: dict[tuple[int, int], tuple[int, ...]]
    truncated: bool = False
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.row0)

    @property
    def rows(self) -> int:
        return self.l_full + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathTable):
            return NotImplemented
        return (
            self.source == other.source
            and self.directed == other.directed
            and self.graph_version == other.graph_version
            and self.l_full == other.l_full
            and self.truncated == other.truncated
            and self.row0 == other.row0
            and self.cells == other.cells
        )

    def stats(self) -> dict[str, int]:
        """Storage figures: rows, nonempty cells (row 0 included), stored entries."""
        filled_row0 = [levels for levels in self.row0.values() if levels]
        return {
            "rows": self.rows,
            "cells": len(filled_row0) + len(self.cells),
            "entries": sum(map(len, filled_row0)) + sum(map(len, self.cells.values())),
        }

    def is_stale(self, g: Graph) -> bool:
        return g.version != self.graph_version


def build_table(p: Projection, *, allow_partial: bool = False) -> PathTable:
    if p.truncated and not allow_partial:
        raise TruncatedProjection(
            f"projection from {p.source} was truncated at level {p.l_full}; "
            "pass allow_partial=True to accept a partial table"
        )
    occurs: dict[int, set[int]] = {v: set() for v in p.universe}
    parents: dict[tuple[int, int], set[int]] = {}
    for depth, level in enumerate(p.levels()):
        for vertex, parent in level:
            occurs.setdefault(vertex, set()).add(depth)
            if parent is not None:
                parents.setdefault((depth, vertex), set()).add(parent)
    return PathTable(
        source=p.source,
        directed=p.directed,
        graph_version=p.graph_version,
        l_full=p.l_full,
        row0={v: tuple(sorted(levels)) for v, levels in sorted(occurs.items())},
        cells={key: tuple(sorted(us)) for key, us in sorted(parents.items())},
        truncated=p.truncated,
    )


def _check_vertex(tbl: PathTable, t: int) -> None:
    if t not in tbl.row0:
        raise UnknownVertex(f"vertex {t} is not in the table of source {tbl.source}")


def _check_level(tbl: PathTable, l: int) -> None:
    if not 1 <= l <= tbl.l_full:
        raise LevelOutOfRange(f"level {l} outside 1..{tbl.l_full}")


def row_zero(tbl: PathTable, t: int) -> list[int]:
    _check_vertex(tbl, t)
    return list(tbl.row0[t])


def cell(tbl: PathTable, l: int, t: int) -> list[int]:
    _check_vertex(tbl, t)
    _check_level(tbl, l)
    return list(tbl.cells.get((l, t), ()))


def reprioritize(tbl: PathTable, l: int, t: int, order: Iterable[int]) -> Status:
    """Replace the priority order of one cell with a permutation of its contents."""
    _check_vertex(tbl, t)
    _check_level(tbl, l)
    order = tuple(order)
    with tbl._lock:
        current = tbl.cells.get((l, t), ())
        if len(set(order)) != len(order) or sorted(order) != sorted(current):
            raise NotAPermutation(f"{list(order)} is not a permutation of cell({l}, {t}) = {list(current)}")
        if order == current:
            return Status.UNCHANGED
        tbl.cells[(l, t)] = order
    return Status.REORDERED


def demote(tbl: PathTable, v: int) -> Status:
    """Move ``v`` to the back of every cell that lists it."""
    changed = False
    with tbl._lock:
        for key, members in tbl.cells.items():
            if v in members and members[-1] != v:
                tbl.cells[key] = tuple(u for u in members if u != v) + (v,)
                changed = True
    return Status.REORDERED if changed else Status.UNCHANGED


def validate(tbl: PathTable, g: Graph | None = None) -> None:
    """Check the structural table invariants; with ``g``, also parent edges."""
    if tbl.row0.get(tbl.source) != (0,):
        raise InvariantViolation(f"row0[{tbl.source}] must be [0] for the source")
    for t, levels in tbl.row0.items():
        if list(levels) != sorted(set(levels)):
            raise InvariantViolation(f"row0[{t}] is not strictly ascending")
        for l in levels:
            if not 0 <= l <= tbl.l_full:
                raise InvariantViolation(f"row0[{t}] has level {l} outside 0..{tbl.l_full}")
            if l == 0 and t != tbl.source:
                raise InvariantViolation(f"only the source may occur at level 0, found {t}")
            if l >= 1 and not tbl.cells.get((l, t)):
                raise InvariantViolation(f"row0[{t}] lists level {l} but cell({l}, {t}) is empty")
    for (l, t), members in tbl.cells.items():
        if t not in tbl.row0:
            raise InvariantViolation(f"cell({l}, {t}) refers to an unknown vertex")
        if not 1 <= l <= tbl.l_full:
            raise InvariantViolation(f"cell({l}, {t}) is outside levels 1..{tbl.l_full}")
        if not members:
            raise InvariantViolation(f"cell({l}, {t}) is stored empty")
        if l not in tbl.row0[t]:
            raise InvariantViolation(f"cell({l}, {t}) is filled but row0[{t}] lacks level {l}")
        if len(set(members)) != len(members):
            raise InvariantViolation(f"cell({l}, {t}) has repeated entries")
        for u in members:
            if l - 1 not in tbl.row0.get(u, ()):
                raise InvariantViolation(f"cell({l}, {t}) lists {u}, which does not occur at level {l - 1}")
            if g is not None and not g.has_edge(u, t):
                raise InvariantViolation(f"cell({l}, {t}) lists {u} but edge {u}->{t} is not in the graph")


# -- text formats ----------------------------------------------------------


def _join(values: Iterable[int]) -> str:
    return ",".join(map(str, values))


def dump_table(tbl: PathTable) -> str:
    """Tab-separated layout of the table, top level first, distance row last as ``0*``."""
    cols = tbl.vertices
    lines = ["\t".join(["", *map(str, cols)])]
    for l in range(tbl.l_full, 0, -1):
        lines.append("\t".join([str(l), *(_join(tbl.cells.get((l, t), ())) for t in cols)]))
    lines.append("\t".join(["0*", *(_join(tbl.row0[t]) for t in cols)]))
    return "\n".join(lines) + "\n"


def serialize_table(tbl: PathTable) -> str:
    lines = [
        f"source={tbl.source}",
        f"directed={'true' if tbl.directed else 'false'}",
        f"graph_version={tbl.graph_version}",
        f"lfull={tbl.l_full}",
    ]
    if tbl.truncated:
        lines.append("truncated=true")
    # Unreached vertices get an empty row0 line so the vertex universe survives.
    lines += [f"row0 {t}: {_join(tbl.row0[t])}".rstrip() for t in tbl.vertices]
    lines += [f"cell {l} {t}: {_join(members)}" for (l, t), members in sorted(tbl.cells.items())]
    return "\n".join(lines) + "\n"


_HEADERS = ("source", "directed", "graph_version", "lfull")


def _int(text: str, lineno: int, *, minimum: int = 0) -> int:
    if not text.isascii() or not text.isdigit():
        raise ParseError(f"expected a non-negative integer, got {text!r}", line=lineno)
    value = int(text)
    if value < minimum:
        raise ParseError(f"value {value} is below {minimum}", line=lineno)
    return value


def _int_list(text: str, lineno: int, *, minimum: int) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(_int(part.strip(), lineno, minimum=minimum) for part in text.split(","))


def load_table(text: str) -> PathTable:
    header: dict[str, str] = {}
    row0: dict[int, tuple[int, ...]] = {}
    cells: dict[tuple[int, int], tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        if "=" in line and ":" not in line:
            key, _, value = line.partition("=")
            if key not in (*_HEADERS, "truncated"):
                raise ParseError(f"unknown header {key!r}", line=lineno)
            if key in header:
                raise ParseError(f"duplicate header {key!r}", line=lineno)
            header[key] = value
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise ParseError(f"unrecognised line {line!r}", line=lineno)
        words = head.split()
        if words[:1] == ["row0"] and len(words) == 2:
            t = _int(words[1], lineno, minimum=1)
            if t in row0:
                raise ParseError(f"duplicate row0 line for {t}", line=lineno)
            row0[t] = _int_list(body, lineno, minimum=0)
        elif words[:1] == ["cell"] and len(words) == 3:
            key = (_int(words[1], lineno, minimum=1), _int(words[2], lineno, minimum=1))
            if key in cells:
                raise ParseError(f"duplicate cell line for {key}", line=lineno)
            members = _int_list(body, lineno, minimum=1)
            if not members:
                raise ParseError("cell lines must list at least one vertex", line=lineno)
            cells[key] = members
        else:
            raise ParseError(f"unrecognised line {line!r}", line=lineno)
    missing = [k for k in _HEADERS if k not in header]
    if missing:
        raise ParseError(f"missing header(s): {', '.join(missing)}")
    if header["directed"] not in ("true", "false"):
        raise ParseError(f"directed must be true or false, got {header['directed']!r}")
    if header.get("truncated", "false") not in ("true", "false"):
        raise ParseError(f"truncated must be true or false, got {header['truncated']!r}")
    tbl = PathTable(
        source=_int(header["source"], 0, minimum=1),
        directed=header["directed"] == "true",
        graph_version=_int(header["graph_version"], 0),
        l_full=_int(header["lfull"], 0),
        row0=dict(sorted(row0.items())),
        cells=dict(sorted(cells.items())),
        truncated=header.get("truncated") == "true",
    )
    validate(tbl)
    return tbl
