"""Exception hierarchy shared by all modules."""


class EnvelopeError(Exception):
    """Base class for every error raised by this package."""


class DomainError(EnvelopeError, ValueError):
    """An argument lies outside the domain of the operation."""


class SingularityError(DomainError):
    """A term was evaluated at a point where it diverges."""


class NumericError(EnvelopeError, ArithmeticError):
    """A term evaluation produced a non-finite number."""

    def __init__(self, message, r=None):
        super().__init__(message if r is None else f"{message} (r = {r!r})")
        self.r = r


class NoBracketError(EnvelopeError):
    """The supplied bracket does not contain a sign change."""


class InfeasibleError(EnvelopeError):
    """No point of a bracket gives a usable solution."""


class NonMonotoneError(EnvelopeError):
    """A quantity expected to be monotone was not, so a fit is ill-posed."""


class UnboundError(EnvelopeError):
    """The oracle found no bound state below the continuum."""


class GridError(EnvelopeError):
    """The radial grid is too small for the requested accuracy."""


class ConfigError(EnvelopeError):
    """A configuration file or state string could not be parsed."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column
