"""
Contains custom errors raised by the algebraic constructions themselves.
"""

from app.errors.base_error import CustomError


class AxiomViolationError(CustomError):
    """Raised when a structure fails an axiom; `location` names the first failing index."""
    def __init__(self, message=None, location=None):
        self.location = location
        super().__init__(message)


class DegenerateFormError(CustomError):
    """Raised when the bilinear form of a functional is singular."""
    pass


class FrobeniusNotFoundError(CustomError):
    """
    Raised when no Frobenius functional was found.

    `conclusive` is True only when every functional was enumerated (finite fields).
    """
    def __init__(self, message=None, conclusive=False):
        self.conclusive = conclusive
        super().__init__(message)


class HypothesisViolatedError(CustomError):
    """Raised when an operation requires a hypothesis (e.g. symmetry) that does not hold."""
    pass
