"""Exception classes shared across the package."""


class PfaffianError(Exception):
    """Base class for every error raised by this package."""


class SpaceMismatchError(PfaffianError, ValueError):
    """Operands live on different variable spaces."""


class DimensionMismatchError(PfaffianError, ValueError):
    """A map or curve has the wrong source or target dimension."""


class DegreeOverflowError(PfaffianError):
    """A polynomial degree exceeded the configured cap."""


class DegenerateInputError(PfaffianError, ValueError):
    """The input form is identically zero where a nonzero form is required."""


class TangencyError(PfaffianError, ValueError):
    """A vector field is not tangent to the distribution."""

    def __init__(self, message, field_name=None):
        super().__init__(message)
        self.field_name = field_name


class NotAdmissibleError(PfaffianError):
    """A curve has a nonzero residual against its form."""


class ChainingError(PfaffianError):
    """Consecutive links of a plan do not share endpoints."""


class DelegationRequired(PfaffianError):
    """The requested construction does not apply; use the named planner instead."""

    def __init__(self, message, delegate=None):
        super().__init__(message)
        self.delegate = delegate


class HintRequired(PfaffianError):
    """An exact cube root is needed but no hint was supplied."""


class InvalidHint(PfaffianError, ValueError):
    """The supplied cube-root hint does not satisfy t**3 == 3*z."""


class InvalidGeneratingFunction(PfaffianError, ValueError):
    """A generating function depends on variables outside its partition."""


class DegenerateDilation(PfaffianError, ValueError):
    """Dilation by zero was requested."""


class SingularPointError(PfaffianError):
    """The covector matrix of a Pfaffian system lost rank at a point."""

    def __init__(self, message, point=None, partial_path=None):
        super().__init__(message)
        self.point = point
        self.partial_path = partial_path


class ParseError(PfaffianError, ValueError):
    """Malformed expression text, with 1-based line and column."""

    def __init__(self, message, line=1, column=1, text=None):
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.line = line
        self.column = column
        self.text = text
