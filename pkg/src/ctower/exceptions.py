"""Exception hierarchy for ctower.

Every error is a ValueError so callers that only care about "bad input" can
catch the builtin, while the CLI distinguishes them for exit codes.
"""

from typing import Optional


class CTowerError(ValueError):
    """Base class for all ctower errors."""


class LevelError(CTowerError):
    """Unknown tower level, or an extension attempted on a frozen tower."""


class LevelMismatchError(CTowerError):
    """Operands of a ring operation live at different levels."""

    def __init__(self, expected: int, actual: int, operation: str = "operation") -> None:
        super().__init__(f"{operation}: expected level {expected}, got level {actual}")
        self.expected = expected
        self.actual = actual


class TrackedPrimeError(CTowerError):
    """Unknown tracked prime, or a query on a prime that is not prime at that level."""


class NotDivisibleError(CTowerError):
    """Exact division requested where the divisor does not divide."""


class DegreeError(CTowerError):
    """Degree functions are undefined on zero."""


class PredicateError(CTowerError):
    """Invalid predicate specification or evaluation failure."""


class PresentationError(CTowerError):
    """Invalid number-ring presentation or element."""


class SerializationError(CTowerError):
    """Malformed tower or element JSON."""


class UnknownGeneratorError(CTowerError):
    """Expression refers to a generator the tower does not have."""


class ExprSyntaxError(CTowerError):
    """Expression text does not parse."""

    def __init__(self, message: str, offset: int, text: Optional[str] = None) -> None:
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset
        self.text = text


class SelfCheckError(CTowerError):
    """A stage invariant failed while building with fail_fast."""
