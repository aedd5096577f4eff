"""Exception hierarchy shared by all evaluation paths."""

from __future__ import annotations


class ZetaError(ValueError):
    """Base class for every error raised by zetaix."""


class DomainError(ZetaError):
    """Argument outside the supported domain (x not in (0,1), bad order, ...)."""


class PoleError(ZetaError):
    """Argument too close to a pole of the function being evaluated."""


class AccuracyError(ZetaError):
    """A series or expansion did not reach the requested tolerance.

    ``achieved`` carries the error estimate at the point of giving up.
    """

    def __init__(self, message: str, achieved: float = float("nan")):
        super().__init__(message)
        self.achieved = achieved


class SnapError(ZetaError):
    """The generic path refused an argument owned by an integer fast path."""
