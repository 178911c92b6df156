"""Exception types shared across the package."""


class SurgeulError(ValueError):
    """Base class for all input/precondition errors raised by this package."""


class InvalidSlopeError(SurgeulError):
    """p, q do not form a valid surgery slope (gcd != 1, p < 1, or q == 0)."""


class NormalizationError(SurgeulError):
    """Alexander coefficients do not satisfy Delta(1) = 1."""


class InvalidInputError(SurgeulError):
    """Malformed input data (bad torus-knot pair, wrong d-table length, ...)."""


class InvalidLabelError(SurgeulError):
    """A Spin^c label outside its valid range (e.g. an even relative label)."""


class PreconditionError(SurgeulError):
    """A documented hypothesis of the requested operation does not hold."""
