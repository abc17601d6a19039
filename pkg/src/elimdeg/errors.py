"""Exception types shared across the package."""


class ElimError(Exception):
    """Base class for every error raised by elimdeg."""


class ParseError(ElimError, ValueError):
    """Malformed polynomial text. ``column`` is 1-based."""

    def __init__(self, message, column=None, text=None):
        self.column = column
        self.text = text
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)


class PreconditionError(ElimError, ValueError):
    """Input violates the shape conditions an operation relies on."""


class CommonFactorError(ElimError, ArithmeticError):
    """The resultant vanishes identically: the inputs share a factor."""


class InvariantError(ElimError, AssertionError):
    """An internal consistency check failed."""
