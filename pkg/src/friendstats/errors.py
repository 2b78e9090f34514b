"""Exception hierarchy shared by all friendstats modules."""

from __future__ import annotations


class FriendStatsError(Exception):
    """Base class for every error raised by this package."""


class EdgeListParseError(FriendStatsError, ValueError):
    """A line of an edge-list file could not be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidationError(FriendStatsError, ValueError):
    """The graph violates a structural invariant (self-loop, id out of range)."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UndefinedStatisticError(FriendStatsError, ValueError):
    """A statistic was requested on input for which it is not defined."""


class PreconditionError(FriendStatsError, ValueError):
    """Inputs fall outside the domain in which a bound or model applies."""


class InfeasibleModelError(PreconditionError):
    """Requested point-model targets cannot be met simultaneously."""


class ParameterError(FriendStatsError, ValueError):
    """A configuration value is out of its allowed range."""


class InvalidCurveError(ParameterError):
    """A demand or supply curve has a slope of the wrong sign."""


class NoEquilibriumError(PreconditionError):
    """Demand and supply curves do not cross at a positive friend count."""
