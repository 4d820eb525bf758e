"""Exception hierarchy for cpt-aggregation."""

from typing import Optional


class AggregationError(Exception):
    """Base class for all errors raised by cpt-aggregation."""

    def __init__(self, message: str, original_error: Optional[Exception] = None):
        self.message = message
        self.original_error = original_error
        super().__init__(self.message)


class InstanceFormatError(AggregationError, ValueError):
    """Raised when an instance or CPT document is malformed or incomplete."""


class UniverseMismatchError(AggregationError, ValueError):
    """Raised when CPTs over different attribute universes are combined."""


class SelectionError(AggregationError, ValueError):
    """Raised when a vote-matrix selection names attributes or columns that do not exist."""


class ResourceLimitError(AggregationError):
    """Raised when a configured resource guard would be exceeded.

    Attributes:
        guard: Name of the guard (e.g. ``"max_matrix_n"``)
        requested: Size the caller asked for
        limit: Configured limit
    """

    def __init__(self, guard: str, requested: int, limit: int):
        self.guard = guard
        self.requested = requested
        self.limit = limit
        super().__init__(f"Resource guard '{guard}' exceeded: requested {requested}, limit {limit}")


class ParameterError(AggregationError, ValueError):
    """Raised when generator or sweep parameters are outside their documented bounds."""
