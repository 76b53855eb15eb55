"""Exception hierarchy shared by the services and the command line."""


class EffNumError(Exception):
    """Base class for every error raised by the toolkit."""


class ConstructionError(EffNumError, ValueError):
    """A domain object was built from invalid data."""


class ConstraintViolationError(ConstructionError):
    """A sum or norm constraint does not hold within tolerance."""


class TransferError(EffNumError, ValueError):
    """Elementary transfer precondition does not hold."""


class DomainError(EffNumError, ValueError):
    """The measure is undefined on the given input."""


class DimensionMismatchError(EffNumError, ValueError):
    """State and structure vectors live in different dimensions."""


class PreconditionError(EffNumError, ValueError):
    """Structural precondition of an operation is not met."""


class VerificationError(EffNumError):
    """An invariant asserted during a sweep does not hold."""


class ParseError(EffNumError, ValueError):
    """Malformed input row; remembers where it happened."""

    def __init__(self, message: str, line_number: int | None = None) -> None:
        """Store the offending line number next to the message."""
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
