"""Exhaustive small-graph machinery for the order-9 MMIK census."""
from __future__ import annotations

from .graphs import (
    GraphError,
    Graph6Error,
    SmallGraph,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty_graph,
    from_edges,
    graph6_decode,
    graph6_encode,
    join,
    path,
)

__all__ = [
    "GraphError",
    "Graph6Error",
    "SmallGraph",
    "complete",
    "complete_multipartite",
    "cycle",
    "disjoint_union",
    "empty_graph",
    "from_edges",
    "graph6_decode",
    "graph6_encode",
    "join",
    "path",
]

__version__ = "0.1.0"
