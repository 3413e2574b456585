"""Update-stream generation, persistence, and validation.

A stream is an ordered list of insert/delete operations that is valid
against the evolving edge set: deletes target present edges, inserts
target absent pairs.  Streams are deterministic in the seed so different
strategies (and different processes) can replay identical workloads.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InsufficientEdges, ParseError
from .graph import Graph, edge_key

INSERT = "insert"
DELETE = "delete"


@dataclass(frozen=True)
class UpdateOp:
    kind: str  # "insert" | "delete"
    edge: tuple[int, int]


def generate_updates(
    g: Graph, count: int, seed: int, delete_fraction: float = 0.5
) -> list[UpdateOp]:
    """Seeded random stream of ``count`` valid updates.

    A biased coin picks the kind; deletes sample uniformly from the
    currently present edges, inserts from the absent pairs over the
    existing vertex set (rejection sampling with an enumeration fallback
    for dense graphs).  The evolving edge set is simulated so every op is
    valid at its position.
    """
    if not 0.0 <= delete_fraction <= 1.0:
        raise ValueError("delete_fraction must be within [0, 1]")
    rng = random.Random(seed)
    verts = sorted(g.vertices())
    edges = sorted(g.edges())
    present = set(edges)
    ops: list[UpdateOp] = []
    for _ in range(count):
        if rng.random() < delete_fraction:
            if not edges:
                raise InsufficientEdges("no edges left to delete")
            i = rng.randrange(len(edges))
            e = edges[i]
            edges[i] = edges[-1]
            edges.pop()
            present.discard(e)
            ops.append(UpdateOp(DELETE, e))
        else:
            e = _sample_absent_pair(rng, verts, present)
            present.add(e)
            edges.append(e)
            ops.append(UpdateOp(INSERT, e))
    return ops


def _sample_absent_pair(rng, verts, present):
    if len(verts) < 2:
        raise InsufficientEdges("not enough vertices to insert an edge")
    for _ in range(1000):
        u = rng.choice(verts)
        v = rng.choice(verts)
        if u == v:
            continue
        e = edge_key(u, v)
        if e not in present:
            return e
    absent = [
        (u, v)
        for i, u in enumerate(verts)
        for v in verts[i + 1 :]
        if (u, v) not in present
    ]
    if not absent:
        raise InsufficientEdges("graph is complete; no pair left to insert")
    return rng.choice(absent)


def save_stream(ops: list[UpdateOp], path: str) -> None:
    """One op per line: ``I u v`` or ``D u v``."""
    with open(path, "w", encoding="utf-8") as fh:
        for op in ops:
            tag = "I" if op.kind == INSERT else "D"
            fh.write(f"{tag} {op.edge[0]} {op.edge[1]}\n")


def load_stream(path: str, g: Graph | None = None) -> list[UpdateOp]:
    """Read a stream file; with a graph given, validate it positionally."""
    ops: list[UpdateOp] = []
    present = set(g.edges()) if g is not None else None
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3 or parts[0] not in ("I", "D"):
                raise ParseError(path, line_no, f"expected 'I u v' or 'D u v', got {line!r}")
            try:
                e = edge_key(int(parts[1]), int(parts[2]))
            except ValueError:
                raise ParseError(path, line_no, f"non-integer vertex id in {line!r}") from None
            kind = INSERT if parts[0] == "I" else DELETE
            if present is not None:
                if kind == DELETE and e not in present:
                    raise ParseError(path, line_no, f"delete of absent edge {e}")
                if kind == INSERT and e in present:
                    raise ParseError(path, line_no, f"insert of present edge {e}")
                (present.discard if kind == DELETE else present.add)(e)
            ops.append(UpdateOp(kind, e))
    return ops
