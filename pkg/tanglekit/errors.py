"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class TangleKitError(Exception):
    """Base error. ``reason`` is a short machine-readable tag for reports."""

    reason: str = "error"
    exit_code: int = 3

    def __init__(self, message: str, reason: str | None = None) -> None:
        super().__init__(message)
        if reason is not None:
            self.reason = reason


class TangleParseError(TangleKitError, ValueError):
    """Malformed expression, fraction or link spec."""

    reason = "parse-error"
    exit_code = 2

    def __init__(self, message: str, position: int | None = None) -> None:
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UsageError(TangleKitError):
    reason = "usage-error"
    exit_code = 2


class PreconditionError(TangleKitError, ValueError):
    """An operation was called outside its domain (e.g. P = R)."""

    reason = "precondition"
    exit_code = 2


class UnsupportedError(TangleKitError):
    """Input is well formed but outside what can be decided here."""

    reason = "unsupported"
    exit_code = 3


class CrossingCapExceeded(UnsupportedError):
    reason = "crossing-cap"

    def __init__(self, crossings: int, cap: int) -> None:
        super().__init__(f"diagram has {crossings} crossings, cap is {cap}")
        self.crossings = crossings
        self.cap = cap


class DiagramError(TangleKitError, ValueError):
    reason = "diagram-error"
    exit_code = 3


class FixtureError(TangleKitError):
    """Golden corpus missing or drifted."""

    reason = "fixture-mismatch"
    exit_code = 1


class MissingFixtureError(FixtureError):
    reason = "missing-fixture"
    exit_code = 2
