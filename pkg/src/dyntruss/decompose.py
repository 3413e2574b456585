"""Batch truss decomposition by support peeling.

Assigns every edge its truss number from scratch.  This is both the
initial-state builder for the incremental engine and the batch baseline
strategy of the benchmark CLI.
"""

from __future__ import annotations

from .graph import Edge, Graph, edge_key


class SupportBuckets:
    """Bucket queue keyed by current support.

    Every live edge sits in exactly one bucket, at the index equal to its
    remaining support; a position table makes decrement O(1).  Extraction
    scans a cursor upward and steps it back one slot after each pop, since
    a peel can drop a companion edge at most one bucket below the cursor.
    """

    def __init__(self, supports: dict[Edge, int]) -> None:
        self.pos: dict[Edge, int] = dict(supports)
        top = max(supports.values(), default=0)
        self.buckets: list[set[Edge]] = [set() for _ in range(top + 1)]
        for e, s in supports.items():
            self.buckets[s].add(e)
        self._cursor = 0
        self._live = len(supports)

    def __len__(self) -> int:
        return self._live

    def pop_min(self) -> tuple[Edge, int]:
        while not self.buckets[self._cursor]:
            self._cursor += 1
        s = self._cursor
        e = self.buckets[s].pop()
        del self.pos[e]
        self._live -= 1
        return e, s

    def peek_min_support(self) -> int:
        c = self._cursor
        while not self.buckets[c]:
            c += 1
        self._cursor = c
        return c

    def contains(self, e: Edge) -> bool:
        return e in self.pos

    def decrement(self, e: Edge) -> None:
        s = self.pos[e]
        if s == 0:
            return
        self.buckets[s].discard(e)
        self.buckets[s - 1].add(e)
        self.pos[e] = s - 1
        if s - 1 < self._cursor:
            self._cursor = s - 1


def _all_supports(g: Graph) -> dict[Edge, int]:
    return {(u, v): len(g.common_neighbors(u, v)) for u, v in g.edges()}


def _peel(g: Graph, stop_at: int | None) -> None:
    """Shared peeling loop.

    Repeatedly removes a minimum-support edge and assigns it truss number
    ``support + 2``, clamped to be non-decreasing along the peel order
    (a companion's support can momentarily drop below the current level).
    Triangles are walked through common neighbors with dead edges skipped
    via bucket membership, so the graph itself is never mutated.

    With ``stop_at = k`` the loop exits as soon as the next assignment
    would reach ``k``; every still-live edge then provably has truss
    number at least ``k`` and is labeled exactly ``k`` (peeled edges keep
    their possibly-approximate lower levels).
    """
    supports = _all_supports(g)
    buckets = SupportBuckets(supports)
    level = 2
    while buckets:
        if stop_at is not None and max(level, buckets.peek_min_support() + 2) >= stop_at:
            for e in buckets.pos:
                g.state_of(e).phi = stop_at
            return
        (u, v), s = buckets.pop_min()
        level = max(level, s + 2)
        st = g.state(u, v)
        st.phi = level
        st.rep = None
        for w in g.common_neighbors(u, v):
            e1, e2 = edge_key(u, w), edge_key(v, w)
            if buckets.contains(e1) and buckets.contains(e2):
                buckets.decrement(e1)
                buckets.decrement(e2)


def truss_decompose(g: Graph) -> None:
    """Write the exact truss number into every edge's state."""
    _peel(g, stop_at=None)


def decompose_from_k(g: Graph, k: int) -> None:
    """Classify every edge as truss number >= k or < k.

    Early-stopped peeling for the batch baseline: edges peeled before the
    level reaches ``k`` get their true (sub-k) truss numbers; survivors
    are labeled ``k``, meaning "at least k".  Only the >=k / <k split is
    contractual.
    """
    if k < 3:
        raise ValueError("decompose_from_k requires k >= 3")
    _peel(g, stop_at=k)
