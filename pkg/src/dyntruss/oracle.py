"""Brute-force reference results for small graphs.

Everything here recomputes from first principles (iterative pruning of a
dense adjacency matrix) and shares no code with the fast peeling or
maintenance paths, so agreement between the two is meaningful evidence.
Intended for graphs up to a few thousand edges; performance is a non-goal.
"""

from __future__ import annotations

import numpy as np

from .graph import Edge, Graph


def _dense(g: Graph) -> tuple[np.ndarray, list[Edge], np.ndarray, np.ndarray]:
    verts = sorted(g.vertices())
    pos = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = np.zeros((n, n), dtype=np.int32)
    edges = sorted(g.edges())
    for u, v in edges:
        adj[pos[u], pos[v]] = 1
        adj[pos[v], pos[u]] = 1
    ii = np.fromiter((pos[u] for u, _ in edges), dtype=np.intp, count=len(edges))
    jj = np.fromiter((pos[v] for _, v in edges), dtype=np.intp, count=len(edges))
    return adj, edges, ii, jj


def decompose_naive(g: Graph) -> dict[Edge, int]:
    """Truss number of every edge, by definitional fixpoint pruning.

    For k = 3, 4, ...: repeatedly delete every edge with fewer than k-2
    triangles inside the surviving subgraph until stable; an edge removed
    while pruning at level k therefore has truss number k-1 (floor 2).
    Each sweep recomputes all surviving supports at once, so the result
    cannot depend on edge iteration order.
    """
    adj, edges, ii, jj = _dense(g)
    m = len(edges)
    phi = np.full(m, 2, dtype=np.int64)
    alive = np.ones(m, dtype=bool)
    k = 2
    while alive.any():
        k += 1
        while True:
            ia, ja = ii[alive], jj[alive]
            sup = np.einsum("ij,ij->i", adj[ia], adj[ja])
            doomed = sup < k - 2
            if not doomed.any():
                break
            idx = np.flatnonzero(alive)[doomed]
            adj[ii[idx], jj[idx]] = 0
            adj[jj[idx], ii[idx]] = 0
            phi[idx] = k - 1
            alive[idx] = False
    return {e: int(phi[i]) for i, e in enumerate(edges)}


def max_trusses_naive(g: Graph, k: int) -> list[set[Edge]]:
    """Connected components of the maximal k-truss subgraph.

    Prunes at level k only, then splits what survives into components by
    union-find over shared endpoints.
    """
    if k < 3:
        raise ValueError("k-truss queries require k >= 3")
    adj, edges, ii, jj = _dense(g)
    m = len(edges)
    alive = np.ones(m, dtype=bool)
    while True:
        ia, ja = ii[alive], jj[alive]
        if ia.size == 0:
            return []
        sup = np.einsum("ij,ij->i", adj[ia], adj[ja])
        doomed = sup < k - 2
        if not doomed.any():
            break
        idx = np.flatnonzero(alive)[doomed]
        adj[ii[idx], jj[idx]] = 0
        adj[jj[idx], ii[idx]] = 0
        alive[idx] = False

    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    survivors = [edges[i] for i in np.flatnonzero(alive)]
    for u, v in survivors:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        union(u, v)
    groups: dict[int, set[Edge]] = {}
    for e in survivors:
        groups.setdefault(find(e[0]), set()).add(e)
    return sorted(groups.values(), key=min)
