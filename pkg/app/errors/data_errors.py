"""
Contains custom errors raised when algebraic data do not fit together.
"""

from app.errors.base_error import CustomError


class DimensionMismatchError(CustomError):
    """Raised when matrix or vector shapes are incompatible."""
    pass


class FieldMismatchError(CustomError):
    """Raised when objects defined over different fields are combined."""
    pass


class SideMismatchError(CustomError):
    """Raised when a right module is given where a left one is expected, or vice versa."""
    pass
