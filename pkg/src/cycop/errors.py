"""Exception hierarchy shared by every module of the package."""


class CycopError(Exception):
    """Base class for all errors raised by cycop."""


class DomainError(CycopError):
    """A variable or set lies outside the domain an operation expects."""


class ClashError(CycopError):
    """Two variable sets that must be disjoint overlap."""


class ValidationError(CycopError):
    """A graph or expression violates a structural invariant."""


class NotATreeError(ValidationError):
    """A well-formed Vernon graph is not an (extended) tree."""

    def __init__(self, reason, message=None):
        self.reason = reason
        super().__init__(message or f"not a tree: {reason}")


class TypingError(CycopError):
    """An expression of the mu-syntax or the combinator syntax is ill-typed."""


class FuelExhausted(CycopError):
    """An exhaustive search ran out of its step budget."""


class ParseError(CycopError):
    """Text could not be parsed; carries a 1-based line and column."""

    def __init__(self, message, line=0, column=0):
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line else ""
        super().__init__(where + message)
