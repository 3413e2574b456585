"""Incremental truss-number maintenance for single edge updates.

One deletion or insertion changes any other edge's truss number by at most
one, and only edges whose truss number lies in a computable affected range
can move at all.  Deletion runs an outward cascade of decrements; insertion
runs a mark-and-verify pass: optimistically mark every edge that currently
has enough qualifying local support to rise, then retract marks (recording
the edge as ``unchanged``) as retractions invalidate neighbors, until the
queue drains.  Surviving marks are the edges that rise.

The inserted edge itself is kept out of the queue: it carries a provisional
truss number (a lower bound computed from pre-update neighbor values) while
the pass runs, and its final value is recomputed afterwards.  If the final
value exceeds the provisional one, the pass is rerun with the better value
until a fixpoint, since a too-low provisional value can only suppress
qualifying triangles, never invent them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import DuplicateEdge, MissingEdge
from .graph import Edge, Graph, edge_key


@dataclass(frozen=True)
class MaintenanceReport:
    """What a single maintained update did, plus effort counters.

    ``changed`` maps each edge whose truss number moved to its (old, new)
    pair; the magnitudes are always exactly one.  ``affected_range`` is the
    closed truss-number interval the update was allowed to touch, or None
    when the update provably touches nothing.  ``enqueue_count`` counts
    every queue push including the ``seed_count`` initial ones;
    ``inspected_count`` counts dequeues.  ``rerun_count`` is the number of
    extra mark-and-verify passes an insertion needed (always 0 for
    deletions).
    """

    kind: str
    edge: Edge
    changed: dict[Edge, tuple[int, int]] = field(default_factory=dict)
    affected_range: tuple[int, int] | None = None
    seed_count: int = 0
    enqueue_count: int = 0
    inspected_count: int = 0
    rerun_count: int = 0


def local_support(g: Graph, v1: int, v2: int, k: int) -> int:
    """Triangles through (v1, v2) whose other two edges both have truss
    number at least ``k``."""
    if not g.has_edge(v1, v2):
        raise MissingEdge(f"edge ({v1}, {v2}) not present")
    count = 0
    for w in g.common_neighbors(v1, v2):
        if g.phi(v1, w) >= k and g.phi(v2, w) >= k:
            count += 1
    return count


def local_support2(g: Graph, v1: int, v2: int, k: int) -> int:
    """Upper-bound local support used by the insertion pass.

    Like :func:`local_support` but a triangle only qualifies while neither
    of its other two edges has been ruled out (``unchanged``).  As flags
    accumulate during one pass the value can only shrink.
    """
    if not g.has_edge(v1, v2):
        raise MissingEdge(f"edge ({v1}, {v2}) not present")
    count = 0
    for w in g.common_neighbors(v1, v2):
        s1 = g.state(v1, w)
        if s1.phi < k or s1.unchanged:
            continue
        s2 = g.state(v2, w)
        if s2.phi < k or s2.unchanged:
            continue
        count += 1
    return count


def new_edge_truss(g: Graph, a: int, b: int) -> int:
    """Truss number of edge (a, b) from its neighbors' current values.

    The largest k such that at least k-2 common neighbors have both legs
    at truss number >= k.  Scans downward from min(support + 2, max leg
    value), both being upper bounds; 2 when the edge has no triangles.
    Exact when neighbor values are final, a lower bound otherwise.
    """
    if not g.has_edge(a, b):
        raise MissingEdge(f"edge ({a}, {b}) not present")
    common = g.common_neighbors(a, b)
    if not common:
        return 2
    mins = sorted((min(g.phi(a, w), g.phi(b, w)) for w in common), reverse=True)
    hi = min(len(common) + 2, mins[0])
    for k in range(hi, 2, -1):
        qualifying = 0
        for p in mins:
            if p >= k:
                qualifying += 1
            else:
                break
        if qualifying >= k - 2:
            return k
    return 2


def delete_edge(g: Graph, a: int, b: int) -> MaintenanceReport:
    """Delete (a, b) and restore correct truss numbers everywhere.

    The affected range [k_min, phi(a, b)] is captured on the pre-deletion
    graph.  Edges are dequeued and decremented once their local support at
    their own level falls short; each decrement re-exposes its triangle
    neighbors.  Requeued duplicates are cheap: an already-decremented edge
    is skipped by its mark.
    """
    e = edge_key(a, b)
    phi_e = g.phi_of(e)
    common = g.common_neighbors(a, b)
    legs = g.triangle_edges(a, b)
    g.remove_edge(a, b)

    if not common:
        return MaintenanceReport("delete", e)
    k_lo = min(g.phi_of(leg) for leg in legs)
    if k_lo > phi_e:
        return MaintenanceReport("delete", e)
    k_hi = phi_e

    queue: deque[Edge] = deque(f for f in legs if k_lo <= g.phi_of(f) <= k_hi)
    seed_count = len(queue)
    enqueued = seed_count
    inspected = 0
    changed: dict[Edge, tuple[int, int]] = {}

    while queue:
        f = queue.popleft()
        inspected += 1
        st = g.state_of(f)
        if st.marked:
            continue
        k = st.phi
        if local_support(g, f[0], f[1], k) < k - 2:
            st.phi = k - 1
            st.marked = True
            changed[f] = (k, k - 1)
            for nb in g.triangle_edges(f[0], f[1]):
                if k_lo <= g.phi_of(nb) <= k_hi:
                    queue.append(nb)
                    enqueued += 1

    for f in changed:
        g.state_of(f).marked = False
    return MaintenanceReport(
        "delete", e, changed, (k_lo, k_hi), seed_count, enqueued, inspected
    )


def insert_edge(g: Graph, a: int, b: int) -> MaintenanceReport:
    """Insert (a, b), raise the edges that now sit in deeper trusses, and
    give the new edge its truss number.

    The affected range is [k_min, min(support + 1, k_max)] over the
    pre-insertion values.  Each mark-and-verify pass works the queue to
    quiescence; edges that already rose in an earlier pass are final (one
    update moves an edge at most once), count firmly at their new value,
    and are excluded from requeueing.

    Three details the verify phase depends on:

    * An edge that flunks its support test must record ``unchanged`` and
      nudge its marked neighbors even when it was never marked itself,
      otherwise those neighbors keep counting it as a possible riser and
      end up raised on support that never materializes.
    * A ruled-out edge only stops counting toward neighbors at its own
      level: at truss number p it still firmly backs any edge testing at
      level k < p, because "won't rise" does not retract the value it
      already has.
    * Retraction nudges go only to currently-marked triangle neighbors;
      unmarked edges are (re)tested with the latest flags whenever their
      own turn comes, so waking them early buys nothing and would let
      retraction waves roam far beyond the marked region.

    The inserted edge itself never enters the queue.  While a pass runs it
    counts optimistically at its provisional value, which can overstate
    the support of its own triangle legs; the closing repair loop demotes
    any raise the settled values fail to back (cascading only through the
    raised set) and recomputes the inserted edge's number as values move.
    """
    e = edge_key(a, b)
    if g.has_edge(a, b):
        raise DuplicateEdge(f"edge {e} already present")
    g.add_edge(a, b)
    st_e = g.state_of(e)

    common = g.common_neighbors(a, b)
    if not common:
        st_e.phi = 2
        return MaintenanceReport("insert", e)

    legs = g.triangle_edges(a, b)
    k_lo = min(g.phi_of(f) for f in legs)
    k_max = max(g.phi_of(f) for f in legs)
    st_e.phi = new_edge_truss(g, a, b)

    if k_lo > len(common) + 1:
        return MaintenanceReport("insert", e)
    k_hi = min(len(common) + 1, k_max)

    changed: dict[Edge, tuple[int, int]] = {}
    seed_count = 0
    enqueued = 0
    inspected = 0
    reruns = 0

    # hot path: raw dict access saves a noticeable constant factor here
    adj = g._adj
    states = g._edges

    def qualifies(f: Edge, k: int) -> bool:
        st = states[f]
        if st.phi > k:
            return True
        if st.phi < k:
            return False
        if f in changed:
            return False
        return not st.unchanged  # the inserted edge is never flagged

    def rise_support(v1: int, v2: int, k: int) -> int:
        count = 0
        for w in adj[v1] & adj[v2]:
            f1 = (v1, w) if v1 < w else (w, v1)
            if not qualifies(f1, k):
                continue
            f2 = (v2, w) if v2 < w else (w, v2)
            if qualifies(f2, k):
                count += 1
        return count

    def admissible(f: Edge) -> bool:
        return f != e and f not in changed and k_lo <= states[f].phi <= k_hi

    while True:
        queue: deque[Edge] = deque(f for f in legs if admissible(f))
        seed_count += len(queue)
        enqueued += len(queue)
        marked: list[Edge] = []
        flagged: list[Edge] = []
        stale: set[Edge] = set()  # marked edges with a retraction next door

        while queue:
            f = queue.popleft()
            inspected += 1
            st = states[f]
            if st.unchanged:
                continue  # ruled out; the bound only shrinks
            if st.marked and f not in stale:
                continue  # only a retraction can change a passing test
            stale.discard(f)
            k = st.phi
            if rise_support(f[0], f[1], k) >= k - 1:
                if not st.marked:
                    st.marked = True
                    marked.append(f)
                    for nb in g.triangle_edges(f[0], f[1]):
                        nb_st = states[nb]
                        if (
                            not nb_st.marked
                            and not nb_st.unchanged
                            and admissible(nb)
                        ):
                            queue.append(nb)
                            enqueued += 1
            else:
                st.marked = False
                st.unchanged = True
                flagged.append(f)
                for nb in g.triangle_edges(f[0], f[1]):
                    if states[nb].marked:
                        stale.add(nb)
                        queue.append(nb)
                        enqueued += 1

        for f in marked:
            st = states[f]
            if st.marked:
                st.marked = False
                changed[f] = (st.phi, st.phi + 1)
                st.phi += 1
        for f in flagged:
            states[f].unchanged = False

        final = new_edge_truss(g, a, b)
        if final > st_e.phi:
            # the pass ran against a too-low provisional value; redo it
            st_e.phi = final
            reruns += 1
            continue
        break

    _repair_overshoot(g, e, legs, changed)

    return MaintenanceReport(
        "insert", e, changed, (k_lo, k_hi), seed_count, enqueued, inspected, reruns
    )


def _repair_overshoot(g: Graph, e: Edge, legs: set[Edge], changed: dict) -> None:
    """Demote raised edges whose settled support falls short.

    A raise can lean on the inserted edge's optimistic provisional value;
    once everything has settled, every raised edge must hold at least
    new-level-minus-2 triangles whose legs sit at the new level for real.
    Demotions revert to the original value (one update moves an edge at
    most once) and can only cascade through other raised edges, since the
    rest of the graph never depended on the raise.  The inserted edge's
    own number is recomputed whenever a supporting value moves.
    """
    st_e = g.state_of(e)
    work = deque(changed)
    while work:
        f = work.popleft()
        if f not in changed:
            continue
        k = g.phi_of(f)
        if local_support(g, f[0], f[1], k) >= k - 2:
            continue
        old, _ = changed.pop(f)
        g.state_of(f).phi = old
        for nb in g.triangle_edges(f[0], f[1]):
            if nb in changed:
                work.append(nb)
        settled = new_edge_truss(g, e[0], e[1])
        if settled != st_e.phi:
            st_e.phi = settled
            for nb in legs:
                if nb in changed:
                    work.append(nb)
