"""Exceptions raised by kbal. The command line maps each family onto its own exit code."""

from typing import Optional


class KbalError(Exception):
    """Base class for every error raised on purpose by kbal"""

    pass


class ConfigurationError(KbalError, ValueError):
    """An option (kernel settings, penalty, confidence level, ...) has an invalid value."""

    pass


class DomainError(KbalError, ValueError):
    """The data cannot be used for the requested computation,
    for example there are no units with W=0 or the dimensions do not agree."""

    pass


class SchemaError(DomainError):
    """A data file does not follow the expected column layout."""

    def __init__(self, message: str, row: Optional[int] = None):
        super().__init__(message)
        self.row = row


class ParseError(SchemaError):
    """A cell of a data file could not be converted into a number."""

    pass


class NumericalError(KbalError, ArithmeticError):
    """A linear system could not be solved, even after adding jitter to its diagonal."""

    def __init__(self, message: str, condition: Optional[float] = None):
        if condition is not None:
            message = f"{message} (condition estimate {condition:.3e})"
        super().__init__(message)
        self.condition = condition
