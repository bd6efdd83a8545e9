"""
Exception hierarchy shared by every spanhyper module.

Everything derives from SpanHyperError so callers (and the CLI) can catch a
single type. Precondition failures are also ValueErrors.
"""

from typing import Optional


class SpanHyperError(Exception):
    """Base class for all spanhyper errors."""


class HypergraphError(SpanHyperError, ValueError):
    """A hypergraph structural invariant is violated."""


class ParseError(SpanHyperError):
    """Malformed .hg input."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(SpanHyperError, ValueError):
    """An operation was called outside its domain."""


class OracleLimitError(SpanHyperError):
    """An exact oracle would exceed its configured cap."""


class BudgetExhaustedError(SpanHyperError):
    """An exact search ran out of its node budget."""

    def __init__(self, message: str, nodes: int = 0):
        self.nodes = nodes
        super().__init__(message)


class PartitionError(SpanHyperError):
    """No profile class is large enough to form the last partition class."""

    def __init__(self, message: str, profile_counts: Optional[dict] = None):
        self.profile_counts = profile_counts or {}
        super().__init__(message)


class DisjointnessError(SpanHyperError, ValueError):
    """Auxiliary bipartite graph inputs overlap."""


class EmbeddingInvariantError(SpanHyperError):
    """A runtime invariant of the staged embedder failed."""


class ConfigError(SpanHyperError):
    """Configuration or run document failed validation."""

    def __init__(self, message: str, paths: Optional[list[str]] = None):
        self.paths = paths or []
        super().__init__(message)


class BoundViolationError(SpanHyperError):
    """A construction exceeded the edge or degree bound it is guaranteed to meet."""
