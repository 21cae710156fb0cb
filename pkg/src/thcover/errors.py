"""Exception types shared across the package."""

from __future__ import annotations


class ThcoverError(Exception):
    """Base class for all package errors."""


class ParseError(ThcoverError):
    """Malformed input text.  Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ThcoverError):
    """Input violates a documented precondition (wrong graph class, guard
    exceeded).  witness, when set, names the offending structure."""

    def __init__(self, message: str, witness: object | None = None):
        self.witness = witness
        super().__init__(message)


class InvariantError(ThcoverError):
    """Internal invariant failed; signals a bug, not bad input."""
