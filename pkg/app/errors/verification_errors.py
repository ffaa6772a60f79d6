"""
Contains custom errors raised when an internal verification fails or cannot be run.
"""

from app.errors.base_error import CustomError


class VerificationFailedError(CustomError):
    """Raised when a computed map or complex fails its own postcondition."""
    pass


class ComplexTooLargeError(CustomError):
    """Raised when a complex or resolution would exceed the configured size cap."""
    def __init__(self, dimension: int, limit: int, what: str = "cochain space"):
        self.dimension = dimension
        self.limit = limit
        super().__init__(f"{what} of dimension {dimension} exceeds the limit of {limit}")
