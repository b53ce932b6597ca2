"""Exception hierarchy shared by all prymbn modules."""


class PrymBNError(Exception):
    """Base class for all errors raised by prymbn."""


class ParameterError(PrymBNError, ValueError):
    """Invalid or unsupported input parameters."""


class GeneratorMismatchError(PrymBNError):
    """Arithmetic attempted between classes written in different generators."""


class DimensionMismatchError(PrymBNError):
    """Class exponent does not match the dimension of the ambient space."""


class UnsupportedSpaceError(PrymBNError):
    """Query requires a top self-intersection number that is not available."""


class IntegralityError(PrymBNError):
    """A quantity that must be an integer evaluated to a proper fraction."""


class InvariantViolationError(PrymBNError):
    """An internal cross-check failed; signals a wrong constraint encoding."""
