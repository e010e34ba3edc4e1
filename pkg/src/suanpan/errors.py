"""Domain exceptions shared by all suanpan modules.

Every error that a caller can provoke with bad-but-well-formed input derives
from DomainError and carries a stable ``code`` used by the CLI (exit code 1)
and the HTTP API (status 400, body ``{"error": code, "message": ...}``).
Programming errors (invariant violations inside the library) raise plain
ValueError/TypeError instead.
"""

from __future__ import annotations


class DomainError(Exception):
    code = "domain-error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class Overflow(DomainError):
    """A value does not fit on the available rods."""

    code = "overflow"


class ExchangeUnavailable(DomainError):
    """Preconditions of a bead exchange do not hold."""

    code = "exchange-unavailable"


class IllegalGestureForRegister(DomainError):
    """The gesture kind is not operable in the given register."""

    code = "illegal-gesture-for-register"


class OutOfRange(DomainError):
    """A move or index exceeds the physical bead bounds."""

    code = "out-of-range"


class UnreplayableTrace(DomainError):
    """A trace failed to replay; ``step`` is the offending gesture index."""

    code = "unreplayable-trace"

    def __init__(self, step: int, cause: Exception):
        super().__init__(f"step {step}: {cause}")
        self.step = step
        self.cause = cause


class OutOfSupportedRange(DomainError):
    """Number outside the range the language tables cover."""

    code = "out-of-supported-range"


class UnparsableWords(DomainError):
    """No number in the supported range has these words."""

    code = "unparsable-words"


class NoMirrorInscription(DomainError):
    """The oral decomposition cannot be laid out on the rods."""

    code = "no-mirror-inscription"


class UnsupportedValue(DomainError):
    """A finger-counting system has no form for this value."""

    code = "unsupported-value"


class MalformedDrawing(DomainError):
    """A drawing description violates the declared style."""

    code = "malformed-drawing"


class AmbiguousDrawing(DomainError):
    """Glyphs cannot be assigned to rod parts."""

    code = "ambiguous-drawing"
