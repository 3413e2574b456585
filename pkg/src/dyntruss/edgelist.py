"""SNAP-style edge-list ingestion."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .graph import Graph


@dataclass
class LoadStats:
    edges: int = 0
    duplicates: int = 0
    self_loops: int = 0


def load_edge_list(path: str) -> tuple[Graph, LoadStats]:
    """Parse whitespace-separated vertex-id pairs, one edge per line.

    Lines starting with '#' are comments.  Duplicate pairs (including the
    reverse direction: SNAP social graphs list both) and self-loops are
    dropped silently but counted.  Raises OSError for unreadable files and
    ParseError (with the line number) for malformed lines.
    """
    g = Graph()
    stats = LoadStats()
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(path, line_no, f"expected two vertex ids, got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(path, line_no, f"non-integer vertex id in {line!r}") from None
            if u < 0 or v < 0:
                raise ParseError(path, line_no, f"negative vertex id in {line!r}")
            if u == v:
                stats.self_loops += 1
                continue
            if g.has_vertex(u) and g.has_vertex(v) and g.has_edge(u, v):
                stats.duplicates += 1
                continue
            g.add_edge(u, v)
            stats.edges += 1
    return g, stats
