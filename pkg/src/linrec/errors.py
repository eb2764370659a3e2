"""Exception hierarchy shared by all linrec modules."""


class LinrecError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(LinrecError):
    """Operands belong to different rings (or modules of different rank)."""


class NotInvertibleError(LinrecError):
    """An operation needed a unit but the element has no inverse."""


class HypothesisError(LinrecError):
    """An identity's hypothesis does not hold, so the check is refused."""


class SpecMismatchError(LinrecError):
    """A sequence's recurrence coefficients do not match the supplied data."""


class SchemaError(LinrecError):
    """Malformed or inconsistent JSON input."""


class AmbiguousOrbitError(LinrecError):
    """Orbit classification changed when the shift search bound was enlarged."""
