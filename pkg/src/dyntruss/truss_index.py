"""Representative-edge index over maximal k-trusses.

A maximal k-truss is a connected component of the subgraph induced by
edges with truss number >= k.  The index keeps, per k >= 3, a set of
representative edges with at least one representative inside every
component, so a k-truss query can breadth-first search outward from the
representatives instead of scanning the whole graph.  Extra
representatives inside one component are legal between updates and are
pruned lazily when a query walks past them.
"""

from __future__ import annotations

from collections import deque

from .errors import StaleIndex
from .graph import Edge, Graph, edge_key
from .maintain import MaintenanceReport


class TrussIndex:
    """Per-k representative sets; k starts at 3 (every edge is a 2-truss)."""

    __slots__ = ("reps",)

    def __init__(self) -> None:
        self.reps: dict[int, set[Edge]] = {}

    def levels(self) -> list[int]:
        return sorted(self.reps)

    def reps_at(self, k: int) -> set[Edge]:
        return self.reps.get(k, set())


def _component_from(g: Graph, k: int, seeds: list[int], seen: set[int]) -> set[Edge]:
    """Edges of the phi >= k component reachable from the seed vertices."""
    comp: set[Edge] = set()
    queue = deque(v for v in seeds if v not in seen)
    seen.update(queue)
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            f = edge_key(v, w)
            if g.phi_of(f) < k:
                continue
            comp.add(f)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return comp


def query_k_truss_scan(g: Graph, k: int) -> list[set[Edge]]:
    """All maximal k-trusses by a full scan over the edge table."""
    if k < 3:
        raise ValueError("k-truss queries require k >= 3")
    seen: set[int] = set()
    out: list[set[Edge]] = []
    for (u, v) in g.edges():
        if g.phi(u, v) < k or u in seen:
            continue
        comp = _component_from(g, k, [u, v], seen)
        if comp:
            out.append(comp)
    return sorted(out, key=min)


def build_index(g: Graph) -> TrussIndex:
    """Fresh index: one representative (the minimum edge) per component,
    for every level from 3 up to the current maximum truss number.

    Also points each edge at the representative of its exact-phi truss.
    """
    idx = TrussIndex()
    for k in range(3, g.max_phi() + 1):
        comps = query_k_truss_scan(g, k)
        if not comps:
            continue
        idx.reps[k] = set()
        for comp in comps:
            rep = min(comp)
            idx.reps[k].add(rep)
            for f in comp:
                st = g.state_of(f)
                if st.phi == k:
                    st.rep = rep
    return idx


def query_k_truss_indexed(g: Graph, idx: TrussIndex, k: int) -> list[set[Edge]]:
    """All maximal k-trusses by traversal from the level-k representatives.

    Walks each representative's component once; representatives landing in
    an already-emitted component are redundant and dropped from the index.
    Raises StaleIndex when a representative fails validity, which signals
    an index-maintenance bug rather than a query error.
    """
    if k < 3:
        raise ValueError("k-truss queries require k >= 3")
    reps = idx.reps.get(k)
    if not reps:
        return []
    seen: set[int] = set()
    out: list[set[Edge]] = []
    covered: set[Edge] = set()
    for rep in sorted(reps):
        if not g.has_edge(*rep) or g.phi_of(rep) < k:
            raise StaleIndex(f"representative {rep} invalid at k={k}")
        if rep in covered:
            continue
        comp = _component_from(g, k, [rep[0], rep[1]], seen)
        covered |= comp
        out.append(comp)
    # lazy dedup: keep each component's smallest surviving representative
    idx.reps[k] = {min(reps & comp) for comp in out}
    return sorted(out, key=min)


def _recover_level(g: Graph, idx: TrussIndex, k: int, seed_vertices: list[int]) -> None:
    """Re-cover the level-k components reachable from the seed vertices:
    add a representative to any that lost theirs, refresh exact-phi rep
    pointers along the way, and drop the level when it empties."""
    reps = idx.reps.setdefault(k, set())
    seen: set[int] = set()
    for v in seed_vertices:
        if v in seen or not g.has_vertex(v):
            continue
        comp = _component_from(g, k, [v], seen)
        if not comp:
            continue
        present = reps & comp
        if present:
            rep = min(present)
        else:
            rep = min(comp)
            reps.add(rep)
        for f in comp:
            st = g.state_of(f)
            if st.phi == k:
                st.rep = rep
    if not reps:
        del idx.reps[k]


def maintain_index_delete(
    g: Graph, idx: TrussIndex, report: MaintenanceReport, deleted: Edge
) -> None:
    """Repair the index right after a maintained deletion.

    For every level the deletion could have touched: drop representatives
    that were deleted or whose truss number fell below the level, then
    re-cover from the deleted edge's endpoints and every changed edge's
    endpoints so shrunken, split, or orphaned components regain exactly
    the coverage they need.
    """
    levels: set[int] = set()
    if report.affected_range is not None:
        lo, hi = report.affected_range
        levels.update(range(max(3, lo), hi + 1))
    levels.update(k for k, eset in idx.reps.items() if deleted in eset)

    seed_vertices = [deleted[0], deleted[1]]
    for f in report.changed:
        seed_vertices.extend(f)

    for k in sorted(levels):
        reps = idx.reps.get(k)
        if reps:
            reps.discard(deleted)
            for f, (_, new) in report.changed.items():
                if new < k:
                    reps.discard(f)
        _recover_level(g, idx, k, seed_vertices)


def maintain_index_insert(
    g: Graph, idx: TrussIndex, report: MaintenanceReport, inserted: Edge
) -> None:
    """Repair the index right after a maintained insertion.

    Levels above the inserted edge's truss number cannot change membership
    and are untouched.  For each level up to it, the inserted edge's
    component absorbs every merge the insertion caused, so one traversal
    from the inserted edge suffices: keep a single representative of those
    found inside, or register the inserted edge when none are.
    """
    phi_e = g.phi_of(inserted)
    for k in range(3, phi_e + 1):
        seen: set[int] = set()
        comp = _component_from(g, k, [inserted[0], inserted[1]], seen)
        reps = idx.reps.setdefault(k, set())
        present = reps & comp
        if not present:
            rep = inserted
            reps.add(rep)
        else:
            rep = min(present)
            for extra in present:
                if extra != rep:
                    reps.discard(extra)
        for f in comp:
            st = g.state_of(f)
            if st.phi == k:
                st.rep = rep
