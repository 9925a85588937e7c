"""Ordered s-t bridges, s-t articulation points, and their components.

A directed multigraph library built around one idea: after reversing an
arbitrary s-t path, a forward search from s is interrupted exactly at the
s-t bridges, so a single linear-time traversal yields the full bridge
sequence and the component structure between the bridges. Splitting the
path's nodes first turns unavoidable nodes into unavoidable edges, which
extends the same traversal to s-t articulation points.

Every result is checkable against a brute-force deletion oracle shipped in
:mod:`stcut.oracle`, and :mod:`stcut.gen` provides seeded instance
generators, including families with planted cut structure.
"""
from .articulation import NonInternalBridge, map_back, st_articulation_points
from .bridges import (
    KIND_ARTICULATION,
    KIND_BRIDGE,
    CutReport,
    SearchStalled,
    SearchStats,
    interrupted_search,
    st_bridges,
)
from .gen import FAMILIES, BadSpec, GenSpec, generate
from .graph import (
    DirectedGraph,
    Edge,
    EndpointOutOfRange,
    MissingHeader,
    ParseError,
    UnknownEdgeId,
    build_graph,
    parse_edge_list,
    remove_edges_add_edges,
    serialize_edge_list,
)
from .oracle import (
    OracleReport,
    OrderViolation,
    PreconditionUnreachable,
    enumerate_st_paths,
    full_oracle_report,
    oracle_components,
    oracle_order,
    oracle_st_articulation,
    oracle_st_bridges,
)
from .paths import SourceBanned, StPath, find_st_path, reachable_set
from .transform import (
    BridgeTransform,
    PathNotInGraph,
    SplitTransform,
    bridge_transform,
    split_transform,
)

__version__ = "0.1.0"

__all__ = [
    "DirectedGraph",
    "Edge",
    "build_graph",
    "remove_edges_add_edges",
    "parse_edge_list",
    "serialize_edge_list",
    "StPath",
    "find_st_path",
    "reachable_set",
    "BridgeTransform",
    "SplitTransform",
    "bridge_transform",
    "split_transform",
    "CutReport",
    "SearchStats",
    "st_bridges",
    "interrupted_search",
    "st_articulation_points",
    "map_back",
    "OracleReport",
    "oracle_st_bridges",
    "oracle_st_articulation",
    "oracle_components",
    "enumerate_st_paths",
    "oracle_order",
    "full_oracle_report",
    "GenSpec",
    "generate",
    "FAMILIES",
    "KIND_BRIDGE",
    "KIND_ARTICULATION",
    "EndpointOutOfRange",
    "UnknownEdgeId",
    "ParseError",
    "MissingHeader",
    "SourceBanned",
    "PathNotInGraph",
    "SearchStalled",
    "NonInternalBridge",
    "PreconditionUnreachable",
    "OrderViolation",
    "BadSpec",
]
