class CliffordError(Exception):
    """Base class for domain errors raised by cliffpin."""


class SignatureMismatch(CliffordError, ValueError):
    pass


class FieldError(CliffordError):
    """An operation needs the imaginary unit but the algebra is real."""


class DimensionError(CliffordError, ValueError):
    """Even/odd dimension precondition violated."""


class InvalidBasis(CliffordError):
    pass


class GroupTooLarge(CliffordError):
    pass


class ClassificationError(CliffordError):
    """Computed data contradicts the admissible classification tables."""
