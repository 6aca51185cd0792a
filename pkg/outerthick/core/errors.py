from typing import Optional


class OuterthickError(ValueError):
    """Base class for every error raised by the outerthick package."""


class InvalidOrderError(OuterthickError):
    """Raised when a graph order (vertex count) is not a positive integer."""


class SelfLoopError(OuterthickError):
    """Raised when an edge would join a vertex to itself."""


class LabelOutOfRangeError(OuterthickError):
    """Raised when a vertex label falls outside [n]_0."""


class OverlappingMatchingError(OuterthickError):
    """Raised when the pairs given as a matching share an endpoint."""


class InvalidFamilyError(OuterthickError):
    """Raised when a family's metadata disagrees with its members."""


class ConstructionError(OuterthickError):
    """
    Raised when a construction fails its own verification.

    This always indicates a bug in the construction, never bad user input.
    """


class StarPropertyError(OuterthickError):
    """Raised when a graph does not have the arithmetic outer cycle it claims."""


class PlanningError(OuterthickError):
    """Raised when no non-blocked outer edge can be found for some member."""

    def __init__(self, message: str, n: Optional[int] = None, member: Optional[int] = None):
        super().__init__(message)
        self.n = n
        self.member = member


class BudgetExceededError(OuterthickError):
    """Raised when an input is larger than a desk-scale oracle accepts."""


class FamilyFormatError(OuterthickError):
    """Raised when a family file cannot be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class ConfigError(OuterthickError):
    """Raised when a budget or CLI setting cannot be understood."""
