"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ProjRouteError(Exception):
    """Base class for all domain errors raised by projroute."""


class SelfLoop(ProjRouteError):
    pass


class ReservedId(ProjRouteError):
    """Vertex id 0 (or a negative id) was used; 0 is reserved for the distance row."""


class UnknownVertex(ProjRouteError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return Exception.__str__(self)


class ParseError(ProjRouteError, ValueError):
    """Malformed text input.

    ``line`` is set by line-oriented formats, ``position`` by the bracket parser.
    """

    def __init__(self, message: str, *, line: int | None = None, position: int | None = None):
        self.line = line
        self.position = position
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif position is not None:
            where = f"position {position}: "
        super().__init__(where + message)


class InvariantViolation(ProjRouteError, ValueError):
    pass


class TruncatedProjection(ProjRouteError):
    pass


class LevelOutOfRange(ProjRouteError, IndexError):
    pass


class NotAPermutation(ProjRouteError, ValueError):
    pass


class UnreachableError(ProjRouteError):
    """Raised by path queries when the target has no occurrence in the table."""


class StaleTable(ProjRouteError):
    """No hop of the stored table survives in the live graph."""


class OracleSizeError(ProjRouteError, ValueError):
    """An exhaustive oracle refused an input above its size gate."""
