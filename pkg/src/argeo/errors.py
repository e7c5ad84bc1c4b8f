"""Exception hierarchy shared across the package."""

from __future__ import annotations


class ArgeoError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ArgeoError):
    """A program file is malformed or violates a load-time invariant."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is not None and self.column is not None:
            return f"line {self.line}, column {self.column}: {self.message}"
        if self.line is not None:
            return f"line {self.line}: {self.message}"
        return self.message


class EngineError(ArgeoError):
    """A computation could not be completed."""


class BudgetExceededError(EngineError):
    """Argument construction hit the configured budget."""


class FrameworkTooLargeError(EngineError):
    """Extension enumeration refused a framework above the size bound."""


class PriorityMissingError(EngineError):
    """A rule needed by the last-link ordering has no declared priority."""


class NotSimplifiedError(EngineError):
    """An operation requiring a simplified theory was given one that is not."""
