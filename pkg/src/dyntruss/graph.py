"""Mutable undirected simple graph with per-edge truss state.

Edges are keyed by canonical vertex pairs ``(u, v)`` with ``u < v``.  Every
edge carries an :class:`EdgeState` holding its truss number plus the
transient flags used by the maintenance pass.  Structural mutation here is
"raw": it does not touch truss numbers beyond initializing new edges; the
maintenance module owns keeping them correct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdge,
    EmptyTriangleSet,
    MissingEdge,
    SelfLoop,
    UnknownVertex,
)

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical unordered pair; rejects self-loops."""
    if u == v:
        raise SelfLoop(f"self-loop ({u}, {v})")
    return (u, v) if u < v else (v, u)


@dataclass(slots=True)
class EdgeState:
    """Truss number plus transient per-pass flags and the index pointer.

    ``marked`` and ``unchanged`` are only ever set inside a single
    maintenance pass and are false at every quiescent point.  ``rep`` is a
    cached pointer to the representative of this edge's exact-phi truss;
    it is advisory and refreshed lazily by the index module.
    """

    phi: int = 2
    marked: bool = False
    unchanged: bool = False
    rep: Edge | None = None


class Graph:
    """Adjacency-set graph over integer vertex labels.

    Labels are kept verbatim (sparse, non-contiguous inputs are fine);
    hash-based adjacency sets give O(1) expected membership regardless of
    label density.  ``deg_max`` is an upper watermark: it grows with
    insertions and is deliberately not lowered on deletion.
    """

    __slots__ = ("_adj", "_edges", "_deg_max")

    def __init__(self) -> None:
        self._adj: dict[int, set[int]] = {}
        self._edges: dict[Edge, EdgeState] = {}
        self._deg_max = 0

    @classmethod
    def from_edges(cls, pairs: Iterable[tuple[int, int]]) -> "Graph":
        g = cls()
        for u, v in pairs:
            g.add_edge(u, v)
        return g

    # -- structure -------------------------------------------------------

    def add_vertex(self, v: int) -> None:
        self._adj.setdefault(v, set())

    def add_edge(self, u: int, v: int) -> Edge:
        """Raw structural insert; endpoints are created as needed."""
        e = edge_key(u, v)
        if e in self._edges:
            raise DuplicateEdge(f"edge {e} already present")
        self.add_vertex(u)
        self.add_vertex(v)
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._edges[e] = EdgeState()
        self._deg_max = max(self._deg_max, len(self._adj[u]), len(self._adj[v]))
        return e

    def remove_edge(self, u: int, v: int) -> Edge:
        """Raw structural delete; isolated vertices are retained."""
        e = edge_key(u, v)
        if e not in self._edges:
            raise MissingEdge(f"edge {e} not present")
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        del self._edges[e]
        return e

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edges

    def vertices(self) -> Iterator[int]:
        return iter(self._adj)

    def edges(self) -> Iterator[Edge]:
        return iter(self._edges)

    def neighbors(self, v: int) -> set[int]:
        """The live neighbor set of ``v`` (not a copy; do not mutate)."""
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} not present") from None

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def deg_max(self) -> int:
        return self._deg_max

    # -- per-edge state --------------------------------------------------

    def state(self, u: int, v: int) -> EdgeState:
        try:
            return self._edges[edge_key(u, v)]
        except KeyError:
            raise MissingEdge(f"edge ({u}, {v}) not present") from None

    def state_of(self, e: Edge) -> EdgeState:
        try:
            return self._edges[e]
        except KeyError:
            raise MissingEdge(f"edge {e} not present") from None

    def phi(self, u: int, v: int) -> int:
        return self.state(u, v).phi

    def phi_of(self, e: Edge) -> int:
        return self.state_of(e).phi

    def phi_table(self) -> dict[Edge, int]:
        return {e: st.phi for e, st in self._edges.items()}

    def max_phi(self) -> int:
        return max((st.phi for st in self._edges.values()), default=2)

    # -- neighborhood primitives ------------------------------------------

    def common_neighbors(self, a: int, b: int) -> set[int]:
        """n(a) & n(b); the edge (a, b) itself need not exist.

        Set intersection iterates the smaller side and hash-probes the
        larger, so this is linear in the smaller neighbor set.
        """
        return self.neighbors(a) & self.neighbors(b)

    def triangle_edges(self, a: int, b: int) -> set[Edge]:
        """All edges joining a common neighbor of (a, b) to a or b."""
        out: set[Edge] = set()
        for w in self.common_neighbors(a, b):
            out.add(edge_key(a, w))
            out.add(edge_key(b, w))
        return out

    def support(self, u: int, v: int) -> int:
        """Number of triangles through the present edge (u, v)."""
        if edge_key(u, v) not in self._edges:
            raise MissingEdge(f"edge ({u}, {v}) not present")
        return len(self.common_neighbors(u, v))

    def k_bounds(self, a: int, b: int) -> tuple[int, int]:
        """(min, max) truss number over the edges joining common neighbors
        of (a, b) to {a, b}.  Undefined (raises) when there are none."""
        lo = hi = None
        for w in self.common_neighbors(a, b):
            for leg in (edge_key(a, w), edge_key(b, w)):
                p = self._edges[leg].phi
                lo = p if lo is None else min(lo, p)
                hi = p if hi is None else max(hi, p)
        if lo is None:
            raise EmptyTriangleSet(f"({a}, {b}) has no common neighbors")
        return lo, hi

    # -- housekeeping ------------------------------------------------------

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = {v: set(ns) for v, ns in self._adj.items()}
        g._edges = {
            e: EdgeState(st.phi, st.marked, st.unchanged, st.rep)
            for e, st in self._edges.items()
        }
        g._deg_max = self._deg_max
        return g

    def check_consistency(self) -> None:
        """Full audit of the structural invariants; raises AssertionError."""
        seen = 0
        for v, ns in self._adj.items():
            for w in ns:
                assert v != w, f"self-loop at {v}"
                assert v in self._adj.get(w, ()), f"asymmetric adjacency {v}->{w}"
                assert edge_key(v, w) in self._edges, f"adjacency without edge {v},{w}"
                seen += 1
        assert seen == 2 * len(self._edges), "adjacency/edge-table size mismatch"
        for (u, v) in self._edges:
            assert u < v, f"non-canonical key ({u}, {v})"
            assert v in self._adj[u] and u in self._adj[v], f"edge {u},{v} missing adjacency"
        actual = max((len(ns) for ns in self._adj.values()), default=0)
        assert self._deg_max >= actual, "deg_max watermark below actual degree"
