"""
Contains custom errors related to parameter validation.
"""

from app.errors.base_error import CustomError


class InvalidParameterValueError(CustomError):
    """Raised when a size, degree, strategy or option is out of range."""
    pass


class UnknownAlgebraError(InvalidParameterValueError):
    """Raised when a builtin algebra name is not in the catalog."""
    pass
