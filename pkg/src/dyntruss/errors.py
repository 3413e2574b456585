"""Exception types shared across the package."""


class TrussError(Exception):
    """Base class for all dyntruss errors."""


class SelfLoop(TrussError):
    """An edge was keyed with identical endpoints."""


class DuplicateEdge(TrussError):
    """Structural insert of an edge that is already present."""


class MissingEdge(TrussError):
    """An operation referenced an edge that is not in the graph."""


class UnknownVertex(TrussError):
    """An operation referenced a vertex that is not in the graph."""


class EmptyTriangleSet(TrussError):
    """k-bounds requested for an endpoint pair with no common neighbors."""


class StaleIndex(TrussError):
    """A truss-index representative no longer satisfies validity."""


class ParseError(TrussError):
    """Malformed edge-list or update-stream input."""

    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


class InsufficientEdges(TrussError):
    """An update stream asked for more deletions/insertions than available."""


class VerificationFailure(TrussError):
    """An invariant check failed while replaying an update stream.

    Carries the smallest reproduction we have: the 0-based position of the
    offending operation in the stream, the operation itself, and a short
    description of the violated check.
    """

    def __init__(self, op_index, op, check, detail):
        super().__init__(f"op #{op_index} {op}: {check}: {detail}")
        self.op_index = op_index
        self.op = op
        self.check = check
        self.detail = detail
