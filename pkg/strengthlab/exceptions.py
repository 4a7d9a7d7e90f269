from typing import List, Optional


class StrengthLabError(Exception):
    """
    Base class for every error raised by strengthlab.
    """

    def __init__(self, message: str, original_exception: Optional[Exception] = None):
        super().__init__(message)
        self.message = message
        self.original_exception = original_exception

    def __str__(self) -> str:
        return self.message


class GraphError(StrengthLabError, ValueError):
    """
    An exception raised when a graph cannot be built from the given data.
    """


class Graph6Error(GraphError):
    """
    An exception raised when graph6 bytes are malformed or use an unsupported
    order encoding.
    """


class EdgeListError(GraphError):
    """
    An exception raised when edge-list text cannot be parsed.
    """


class EmptyGraphError(StrengthLabError, ValueError):
    """
    An exception raised when an operation needs edges (or no isolated
    vertices) and the graph has none.
    """


class BudgetError(StrengthLabError):
    """
    An exception raised when a request exceeds a configured search budget.
    """


class CursorError(StrengthLabError):
    """
    An exception raised when a cursor or checkpoint is stale or corrupt.
    """


class InsufficientDataError(StrengthLabError):
    """
    An exception raised when the Ramsey registries cannot resolve a value.
    """


class VerificationError(StrengthLabError):
    """
    An exception raised when a verification suite records a violation.
    """

    def __init__(self, message: str, failures: Optional[List[str]] = None):
        super().__init__(message)
        self.failures = failures or []


class SearchInterrupted(StrengthLabError):
    """
    An exception raised when a sharded search stops on request after writing
    its checkpoint.
    """
