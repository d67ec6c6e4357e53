"""
Exception hierarchy for the monoid laboratory.

Every library error derives from LabError. Errors caused by bad user input
also derive from ValueError (or KeyError) so callers that only know the
builtin exceptions keep working.
"""
from typing import Optional


class LabError(Exception):
    """Base class for all errors raised by the library."""


class NotationError(LabError, ValueError):
    """A literal (word, tau-word, identity, monoid spec) could not be parsed."""


class NotReducedError(NotationError):
    """A tau-word literal is not in canonical form for its congruence."""

    def __init__(self, literal: str, suggestion: Optional[str] = None):
        self.literal = literal
        self.suggestion = suggestion
        message = f"'{literal}' is not reduced"
        if suggestion is not None:
            message += f" (reduced form: '{suggestion}')"
        super().__init__(message)


class IllegalSegmentError(NotationError):
    """A segment is not allowed in the current notation mode."""


class UnsupportedKindError(LabError, ValueError):
    """The operation is not defined for the given congruence kind."""


class KindMismatchError(LabError, ValueError):
    """Two tau-words of different congruence kinds were combined."""


class CapExceededError(LabError, RuntimeError):
    """A bounded computation ran past its cap (the object may be infinite)."""


class UnknownFamilyError(LabError, KeyError):
    """No identity family is registered under the requested name."""
