"""Dynamic k-truss maintenance for evolving graphs.

Keeps every edge's truss number correct under streaming single-edge
insertions and deletions, answers maximal k-truss queries through a
representative-edge index, and benchmarks incremental maintenance against
batch recomputation.
"""

from .decompose import SupportBuckets, decompose_from_k, truss_decompose
from .errors import (
    DuplicateEdge,
    EmptyTriangleSet,
    InsufficientEdges,
    MissingEdge,
    ParseError,
    SelfLoop,
    StaleIndex,
    TrussError,
    UnknownVertex,
    VerificationFailure,
)
from .graph import Edge, EdgeState, Graph, edge_key
from .maintain import (
    MaintenanceReport,
    delete_edge,
    insert_edge,
    local_support,
    local_support2,
    new_edge_truss,
)
from .oracle import decompose_naive, max_trusses_naive
from .truss_index import (
    TrussIndex,
    build_index,
    maintain_index_delete,
    maintain_index_insert,
    query_k_truss_indexed,
    query_k_truss_scan,
)

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "EdgeState",
    "Graph",
    "edge_key",
    "truss_decompose",
    "decompose_from_k",
    "SupportBuckets",
    "MaintenanceReport",
    "delete_edge",
    "insert_edge",
    "local_support",
    "local_support2",
    "new_edge_truss",
    "TrussIndex",
    "build_index",
    "query_k_truss_scan",
    "query_k_truss_indexed",
    "maintain_index_delete",
    "maintain_index_insert",
    "decompose_naive",
    "max_trusses_naive",
    "TrussError",
    "SelfLoop",
    "DuplicateEdge",
    "MissingEdge",
    "UnknownVertex",
    "EmptyTriangleSet",
    "StaleIndex",
    "ParseError",
    "InsufficientEdges",
    "VerificationFailure",
]
