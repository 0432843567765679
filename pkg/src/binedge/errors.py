"""Exception hierarchy shared by all binedge modules."""

from __future__ import annotations


class BinedgeError(Exception):
    """Base class for every error raised by binedge."""


class DimensionError(BinedgeError, ValueError):
    """Operands live in polynomial rings with different numbers of variables."""


class FieldMismatchError(BinedgeError, ValueError):
    """Operands use different coefficient fields."""


class PolynomialParseError(BinedgeError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class ResourceCapError(BinedgeError, RuntimeError):
    """A configured computation cap was exceeded; no answer is produced."""

    def __init__(self, cap: str, limit: int, message: str = ""):
        self.cap = cap
        self.limit = limit
        text = f"resource cap {cap}={limit} exceeded"
        if message:
            text += f": {message}"
        super().__init__(text)


class IndeterminateError(BinedgeError, RuntimeError):
    """Bounded search failed and no definitive fallback was allowed to run."""


class GraphError(BinedgeError, ValueError):
    """Invalid graph or a graph violating an operation's precondition."""


class DisconnectedGraphError(GraphError):
    pass


class GraphParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class MalformedLineError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class LoopError(GraphParseError):
    pass


class FamilyMismatchError(BinedgeError, ValueError):
    """A family-specific operation was called on a graph outside that family."""


class ComplexParseError(BinedgeError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
