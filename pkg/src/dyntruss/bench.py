"""Benchmark strategies and the invariant-checking verify mode.

Three ways to answer k-truss queries over an update stream:

* ``batch``: apply updates structurally and rerun (early-stopped) truss
  decomposition at each query point;
* ``progressive``: maintain truss numbers per update, answer queries by
  scanning for edges at or above k;
* ``indexed``: additionally maintain representative edges and answer
  queries by traversal from them.

All three must produce identical component sets for the same stream.
Timings are kept per phase so the maintain/query trade-off is directly
inspectable; setup (loading, the initial decomposition, index build) is
kept out of the per-strategy totals since it is shared state an evolving
deployment would already have.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field

from .decompose import decompose_from_k, truss_decompose
from .errors import VerificationFailure
from .graph import Edge, Graph, edge_key
from .maintain import MaintenanceReport, delete_edge, insert_edge
from .oracle import decompose_naive
from .truss_index import (
    build_index,
    maintain_index_delete,
    maintain_index_insert,
    query_k_truss_indexed,
    query_k_truss_scan,
)
from .updates import DELETE, INSERT, UpdateOp

STRATEGIES = ("batch", "progressive", "indexed")
SCHEMA_VERSION = 1


@dataclass
class BenchConfig:
    strategy: str
    k: int
    update_count: int
    seed: int
    delete_fraction: float = 0.5
    query_every: int | None = None  # None: one query after the last update

    def __post_init__(self) -> None:
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.k < 3:
            raise ValueError("k must be >= 3")
        if self.update_count < 0:
            raise ValueError("update_count must be >= 0")


@dataclass
class QueryPoint:
    op_index: int
    component_count: int
    edge_total: int
    digest: str


@dataclass
class BenchReport:
    strategy: str
    k: int
    update_count: int
    seed: int
    delete_fraction: float
    query_every: int | None
    wall_times: dict[str, float] = field(default_factory=dict)
    counters: dict[str, int] = field(default_factory=dict)
    query_points: list[QueryPoint] = field(default_factory=list)
    vertices: int = 0
    edges_initial: int = 0
    edges_final: int = 0
    schema: int = SCHEMA_VERSION

    @property
    def strategy_total(self) -> float:
        """Seconds spent maintaining, index-maintaining, and querying."""
        return (
            self.wall_times.get("maintain", 0.0)
            + self.wall_times.get("index", 0.0)
            + self.wall_times.get("query", 0.0)
        )

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "strategy": self.strategy,
            "k": self.k,
            "update_count": self.update_count,
            "seed": self.seed,
            "delete_fraction": self.delete_fraction,
            "query_every": self.query_every,
            "wall_times": self.wall_times,
            "strategy_total": self.strategy_total,
            "counters": self.counters,
            "query_points": [vars(q) for q in self.query_points],
            "graph": {
                "vertices": self.vertices,
                "edges_initial": self.edges_initial,
                "edges_final": self.edges_final,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def components_digest(components: list[set[Edge]]) -> str:
    """Order-independent fingerprint of a component set."""
    canon = sorted(sorted(comp) for comp in components)
    blob = json.dumps(canon, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _query_points(count: int, every: int | None) -> list[int]:
    if count == 0:
        return [0]
    q = every if every and every > 0 else count
    points = set(range(q, count + 1, q))
    points.add(count)
    return sorted(points)


def run_strategy(g: Graph, stream: list[UpdateOp], cfg: BenchConfig) -> BenchReport:
    """Drive one strategy over the stream, timing each phase.

    Mutates ``g``; callers comparing strategies should hand each run its
    own copy.  Query results are recorded as digests so cross-strategy
    equality checks do not blow up report size.
    """
    report = BenchReport(
        strategy=cfg.strategy,
        k=cfg.k,
        update_count=len(stream),
        seed=cfg.seed,
        delete_fraction=cfg.delete_fraction,
        query_every=cfg.query_every,
        vertices=g.vertex_count,
        edges_initial=g.edge_count,
    )
    counters = {"enqueued": 0, "inspected": 0, "seeds": 0, "reruns": 0}
    times = {"setup": 0.0, "maintain": 0.0, "index": 0.0, "query": 0.0}

    t0 = time.perf_counter()
    idx = None
    if cfg.strategy in ("progressive", "indexed"):
        truss_decompose(g)
        if cfg.strategy == "indexed":
            idx = build_index(g)
    times["setup"] = time.perf_counter() - t0

    def absorb(rep: MaintenanceReport) -> None:
        counters["enqueued"] += rep.enqueue_count
        counters["inspected"] += rep.inspected_count
        counters["seeds"] += rep.seed_count
        counters["reruns"] += rep.rerun_count

    def run_query(op_index: int) -> None:
        t = time.perf_counter()
        if cfg.strategy == "batch":
            decompose_from_k(g, cfg.k)
            comps = query_k_truss_scan(g, cfg.k)
        elif cfg.strategy == "progressive":
            comps = query_k_truss_scan(g, cfg.k)
        else:
            comps = query_k_truss_indexed(g, idx, cfg.k)
        times["query"] += time.perf_counter() - t
        report.query_points.append(
            QueryPoint(
                op_index=op_index,
                component_count=len(comps),
                edge_total=sum(len(c) for c in comps),
                digest=components_digest(comps),
            )
        )

    points = _query_points(len(stream), cfg.query_every)
    next_point = 0
    if points[0] == 0:  # empty stream: one query of the initial graph
        run_query(0)
        next_point = 1
    for i, op in enumerate(stream, start=1):
        t = time.perf_counter()
        if cfg.strategy == "batch":
            if op.kind == DELETE:
                g.remove_edge(*op.edge)
            else:
                g.add_edge(*op.edge)
            times["maintain"] += time.perf_counter() - t
        else:
            if op.kind == DELETE:
                rep = delete_edge(g, *op.edge)
            else:
                rep = insert_edge(g, *op.edge)
            times["maintain"] += time.perf_counter() - t
            absorb(rep)
            if cfg.strategy == "indexed":
                t = time.perf_counter()
                if op.kind == DELETE:
                    maintain_index_delete(g, idx, rep, op.edge)
                else:
                    maintain_index_insert(g, idx, rep, op.edge)
                times["index"] += time.perf_counter() - t
        if next_point < len(points) and points[next_point] == i:
            run_query(i)
            next_point += 1

    report.wall_times = times
    report.counters = counters
    report.edges_final = g.edge_count
    return report


# -- verification -----------------------------------------------------------

VERIFY_EDGE_LIMIT = 5000


def verify_mode(g: Graph, stream: list[UpdateOp]) -> dict:
    """Replay the stream with every invariant checked after each update.

    Covers: exact agreement with the brute-force reference decomposition,
    the plus/minus-one bound, monotone change direction, affected-range
    confinement, membership of the inserted edge in every raised edge's
    deeper truss, the neighborhood upper bound on truss numbers, the
    support bound, transient-flag hygiene, and index coverage/validity
    (indexed queries must equal scans at every level).

    Raises VerificationFailure carrying the first offending op.  Intended
    for graphs the reference oracle can handle (guarded at
    ``VERIFY_EDGE_LIMIT`` edges).
    """
    if g.edge_count > VERIFY_EDGE_LIMIT:
        raise ValueError(
            f"verify mode is capped at {VERIFY_EDGE_LIMIT} edges "
            f"(got {g.edge_count}); the oracle would be too slow"
        )
    truss_decompose(g)
    idx = build_index(g)
    _check_state(g, idx, -1, None, None)
    checks = 0
    for i, op in enumerate(stream):
        if op.kind == DELETE:
            rep = delete_edge(g, *op.edge)
            maintain_index_delete(g, idx, rep, op.edge)
        else:
            rep = insert_edge(g, *op.edge)
            maintain_index_insert(g, idx, rep, op.edge)
        _check_report(g, i, op, rep)
        _check_state(g, idx, i, op, rep)
        checks += 1
    return {"ops": len(stream), "checked": checks, "edges_final": g.edge_count}


def _fail(i: int, op, check: str, detail: str):
    raise VerificationFailure(i, op, check, detail)


def _check_report(g: Graph, i: int, op: UpdateOp, rep: MaintenanceReport) -> None:
    sign = -1 if op.kind == DELETE else +1
    for f, (old, new) in rep.changed.items():
        if new - old != sign:
            _fail(i, op, "unit-change", f"{f}: {old} -> {new}")
        if rep.affected_range is None:
            _fail(i, op, "range-confinement", f"{f} changed with empty range")
        lo, hi = rep.affected_range
        if not lo <= old <= hi:
            _fail(i, op, "range-confinement", f"{f}: old {old} outside [{lo}, {hi}]")
    if op.kind == INSERT and rep.changed:
        _check_risen_membership(g, i, op, rep)


def _check_risen_membership(g: Graph, i: int, op, rep) -> None:
    # every raised edge must now share a truss, at its new level, with the
    # inserted edge
    from collections import deque

    target = rep.edge
    for f, (_, new) in rep.changed.items():
        seen = {f[0], f[1]}
        queue = deque(seen)
        found = False
        while queue and not found:
            v = queue.popleft()
            for w in g.neighbors(v):
                if g.phi(v, w) < new:
                    continue
                if edge_key(v, w) == target:
                    found = True
                    break
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if not found:
            _fail(i, op, "risen-membership", f"{f} raised to {new}, inserted edge unreachable")


def _check_state(g: Graph, idx, i: int, op, rep) -> None:
    oracle = decompose_naive(g)
    for f, truth in oracle.items():
        st = g.state_of(f)
        if st.phi != truth:
            _fail(i, op, "oracle-equivalence", f"{f}: maintained {st.phi}, oracle {truth}")
        if st.marked or st.unchanged:
            _fail(i, op, "flag-hygiene", f"{f} left with transient flags")
    for (u, v), st in list(g._edges.items()):
        common = g.common_neighbors(u, v)
        if st.phi > len(common) + 2:
            _fail(i, op, "support-bound", f"({u},{v}): phi {st.phi} > support+2")
        if not common:
            if st.phi != 2:
                _fail(i, op, "neighborhood-bound", f"({u},{v}): no triangles but phi {st.phi}")
        else:
            cap = max(
                max(g.phi(u, w), g.phi(v, w)) for w in common
            )
            if st.phi > cap:
                _fail(i, op, "neighborhood-bound", f"({u},{v}): phi {st.phi} > legs max {cap}")
    for k in range(3, g.max_phi() + 1):
        scan = query_k_truss_scan(g, k)
        indexed = query_k_truss_indexed(g, idx, k)
        if sorted(map(sorted, scan)) != sorted(map(sorted, indexed)):
            _fail(i, op, "index-equivalence", f"k={k}: scan != indexed")
    for k, reps in idx.reps.items():
        for r in reps:
            if not g.has_edge(*r) or g.phi_of(r) < k:
                _fail(i, op, "index-validity", f"rep {r} invalid at k={k}")
