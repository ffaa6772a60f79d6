from dataclasses import dataclass
from functools import cached_property
from typing import Any, List, Optional, Sequence, Tuple

from app.errors import AxiomViolationError, DimensionMismatchError
from models.linalg import Field, Matrix, Vector, linear_combination


@dataclass(frozen=True, eq=False)
class AlgebraPresentation:
    """
    A finite-dimensional unital associative algebra given by structure constants.

    Attributes:
    ----------
    field : Field
        Coefficient field K.
    basis_names : Tuple[str, ...]
        Names of the basis elements e_0, ..., e_{n-1}.
    structure : Tuple[Tuple[Tuple[Any, ...], ...], ...]
        structure[i][j] is the coordinate vector of e_i·e_j.
    unit : Tuple[Any, ...]
        Coordinates of 1_A.
    name : str
        Label used in reports (e.g. "exterior2", "matrix(2)").
    default_counit : Optional[Tuple[Any, ...]]
        Canonical Frobenius functional, when the algebra comes with one.
    verify : bool
        Check associativity and the unit law on construction.
    """
    field: Field
    basis_names: Tuple[str, ...]
    structure: Tuple[Tuple[Tuple[Any, ...], ...], ...]
    unit: Tuple[Any, ...]
    name: str = "algebra"
    default_counit: Optional[Tuple[Any, ...]] = None
    verify: bool = True

    def __post_init__(self):
        n = len(self.basis_names)
        if len(self.unit) != n or len(self.structure) != n:
            raise DimensionMismatchError(f"Presentation of dimension {n} has inconsistent shapes.")
        if any(len(row) != n or any(len(v) != n for v in row) for row in self.structure):
            raise DimensionMismatchError(f"Structure constants must form an {n}x{n}x{n} tensor.")
        if self.default_counit is not None and len(self.default_counit) != n:
            raise DimensionMismatchError("Default counit has the wrong length.")
        if self.verify:
            violation = self.find_axiom_violation()
            if violation is not None:
                message, location = violation
                raise AxiomViolationError(message, location=location)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def basis_vector(self, i: int) -> Vector:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def unit_vector(self) -> Vector:
        return list(self.unit)

    @cached_property
    def multiplication_matrix(self) -> Matrix:
        """μ as an n × n² matrix; column i·n + j holds e_i·e_j."""
        n = self.dim
        columns = [list(self.structure[i][j]) for i in range(n) for j in range(n)]
        return Matrix.from_columns(self.field, columns, n)

    @cached_property
    def left_regular_matrices(self) -> List[Matrix]:
        """L_i : b ↦ e_i·b; column j is e_i·e_j."""
        n = self.dim
        return [Matrix.from_columns(self.field, [list(self.structure[i][j]) for j in range(n)], n)
                for i in range(n)]

    @cached_property
    def right_regular_matrices(self) -> List[Matrix]:
        """R_i : b ↦ b·e_i; column j is e_j·e_i."""
        n = self.dim
        return [Matrix.from_columns(self.field, [list(self.structure[j][i]) for j in range(n)], n)
                for i in range(n)]

    def combine(self, coefficients: Sequence[Any], matrices: Sequence[Matrix], size: int = None) -> Matrix:
        size = self.dim if size is None else size
        return linear_combination(self.field, coefficients, matrices, size, size)

    def find_axiom_violation(self) -> Optional[Tuple[str, Tuple]]:
        """First failure of the unit law or of associativity, as (message, location)."""
        n = self.dim
        names = self.basis_names
        identity = Matrix.identity(self.field, n)
        left, right = self.left_regular_matrices, self.right_regular_matrices
        if self.combine(self.unit, left) != identity:
            return "unit does not act as identity from the left", ("unit", "left")
        if self.combine(self.unit, right) != identity:
            return "unit does not act as identity from the right", ("unit", "right")
        for i in range(n):
            for j in range(n):
                expected = self.combine(self.structure[i][j], left)
                actual = left[i] @ left[j]
                if expected != actual:
                    k = next(col for col in range(n) if expected.column(col) != actual.column(col))
                    return (
                        f"associativity fails: ({names[i]}·{names[j]})·{names[k]} "
                        f"!= {names[i]}·({names[j]}·{names[k]})",
                        (i, j, k),
                    )
        return None
