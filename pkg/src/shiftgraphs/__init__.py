"""Shift graphs, line digraphs, constructive colorings and one-path
acyclic orientations."""

from .core import (
    AcyclicDigraph,
    DirectedCycleError,
    EdgeDir,
    GraphError,
    InternalInvariantError,
    Orientation,
    PathCountMatrix,
    SizeCapExceeded,
    UndirectedGraph,
    connected_components,
    graph_from_json,
    to_dot,
    to_json,
    topological_order,
    underlying,
)

__all__ = [
    "AcyclicDigraph",
    "DirectedCycleError",
    "EdgeDir",
    "GraphError",
    "InternalInvariantError",
    "Orientation",
    "PathCountMatrix",
    "SizeCapExceeded",
    "UndirectedGraph",
    "connected_components",
    "graph_from_json",
    "to_dot",
    "to_json",
    "topological_order",
    "underlying",
]

__version__ = "0.1.0"
