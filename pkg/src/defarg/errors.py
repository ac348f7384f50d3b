"""Exception hierarchy shared by the parser, reasoner and CLI."""

from __future__ import annotations


class DefargError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DefargError, ValueError):
    """Malformed formula or theory text.

    ``line`` and ``column`` are 1-based and point at the offending token.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class ReservedNameError(ParseError):
    """An identifier uses the ``@`` namespace reserved for assumptions."""


class TheoryError(DefargError, ValueError):
    """A structurally invalid default theory (duplicate names, no justifications...)."""


class UnknownDefaultError(DefargError, KeyError):
    pass


class AssumptionIndexError(DefargError, IndexError):
    pass


class NotADefaultTermError(DefargError, ValueError):
    pass


class AssumptionInQueryError(DefargError, ValueError):
    """A query formula mentions assumption propositions; queries must stay over P."""


class BoundExceededError(DefargError, ValueError):
    pass


class InvariantViolation(DefargError, AssertionError):
    """Two independent routes to the same answer disagreed."""
