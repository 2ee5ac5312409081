"""Shortest paths in unweighted dynamic graphs from projection-derived path tables."""

from .errors import (
    InvariantViolation,
    LevelOutOfRange,
    NotAPermutation,
    OracleSizeError,
    ParseError,
    ProjRouteError,
    ReservedId,
    SelfLoop,
    StaleTable,
    TruncatedProjection,
    UnknownVertex,
    UnreachableError,
)
from .graph import Graph, Status, dump_edge_list, from_edges, load_edge_list, new_graph
from .projection import (
    BuildLimits,
    Mode,
    Projection,
    ProjectionNode,
    build_projection,
    implied_edges,
    parse_bracket,
    to_bracket,
)
from .query import (
    UNREACHABLE,
    Path,
    QueryStats,
    distance,
    enumerate_shortest_paths,
    shortest_path,
    shortest_path_checked,
)
from .table import (
    PathTable,
    build_table,
    cell,
    demote,
    dump_table,
    load_table,
    reprioritize,
    row_zero,
    serialize_table,
)

__version__ = "0.1.0"
