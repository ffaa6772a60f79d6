"""
This package contains custom error classes for the application.

It provides a structured way to handle various types of errors, such as:
- Shape, field and side mismatches between algebraic objects
- Malformed input files and invalid parameters
- Axiom violations and degenerate Frobenius forms
- Failed verifications of the constructed isomorphisms

All error classes can be imported from this module for ease of use.

Example:
    from app.errors import FieldMismatchError, DegenerateFormError
"""
from .base_error import CustomError
from .data_errors import DimensionMismatchError, FieldMismatchError, SideMismatchError
from .format_errors import InvalidFormatError
from .validation_errors import InvalidParameterValueError, UnknownAlgebraError
from .algebra_errors import (
    AxiomViolationError, DegenerateFormError, FrobeniusNotFoundError, HypothesisViolatedError
)
from .verification_errors import VerificationFailedError, ComplexTooLargeError
from .io_errors import TemplateNotFoundError, InputFileNotFoundError
