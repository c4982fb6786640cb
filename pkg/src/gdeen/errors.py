"""Exception types shared across the package."""


class GdeenError(Exception):
    """Base class for all package errors."""


class UnknownSymbol(GdeenError):
    """A generator symbol is not in the alphabet of the given parameters."""


class ParamsMismatch(GdeenError):
    """Two values with incompatible group/algebra parameters were combined."""


class BadFormat(GdeenError):
    """External input (JSON, word text) could not be parsed."""


class InvariantViolation(GdeenError):
    """Parsed data violates a structural invariant; the message names it."""


class EnumerationTooLarge(GdeenError):
    """A requested enumeration exceeds the configured cap."""


class NotInGroup(GdeenError):
    """An element was looked up in a table for a different group."""


class ArityMismatch(GdeenError):
    """Polynomials over different variable sets were combined."""


class RecursionGuardExceeded(GdeenError):
    """A Hecke reduction exceeded the primitive-move budget.

    This always signals a bug in the rewriting tables, never expected
    behaviour on valid input.
    """
