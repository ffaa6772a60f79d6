from dataclasses import dataclass
from typing import Any, List, Tuple

from app.errors import DimensionMismatchError
from models.algebras import AlgebraPresentation
from models.linalg import Matrix, Vector


@dataclass(frozen=True, eq=False)
class FrobeniusData:
    """
    A Frobenius structure on an algebra: a functional ε whose form η(a, b) = ε(ab) is nondegenerate.

    Attributes:
    ----------
    algebra : AlgebraPresentation
        The underlying algebra A.
    counit : Tuple[Any, ...]
        The functional ε as a coefficient vector.
    gram : Matrix
        gram[i][j] = ε(e_i·e_j).
    gram_inverse : Matrix
        Inverse of the Gram matrix; row i holds the left dual basis vector e_i^#.
    delta_one : Tuple[Any, ...]
        δ(1_A) = Σ_j e_j ⊗ e_j^# in A⊗A, flat index j·n + k.
    coproduct_matrix : Matrix
        δ as an n² × n matrix; column i is δ(e_i).
    """
    algebra: AlgebraPresentation
    counit: Tuple[Any, ...]
    gram: Matrix
    gram_inverse: Matrix
    delta_one: Tuple[Any, ...]
    coproduct_matrix: Matrix

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def is_symmetric(self) -> bool:
        return self.gram == self.gram.transpose()

    @property
    def dual_basis(self) -> List[Vector]:
        """e_i^# with η(e_i^#, e_j) = δ_ij."""
        return self.gram_inverse.to_rows()

    def counit_matrix(self) -> Matrix:
        """ε as a 1 × n matrix."""
        return Matrix.row_vector(self.field, list(self.counit))

    def evaluate(self, a: Vector) -> Any:
        if len(a) != self.dim:
            raise DimensionMismatchError(f"Expected a vector of length {self.dim}, got {len(a)}.")
        total = self.field.zero
        for c, x in zip(self.counit, a):
            if c and x:
                total += c * x
        return total

    def lambda_left(self, a: Vector) -> Vector:
        """The functional b ↦ ε(a·b)."""
        return (Matrix.row_vector(self.field, list(a)) @ self.gram).row(0)

    def lambda_right(self, a: Vector) -> Vector:
        """The functional b ↦ ε(b·a)."""
        return self.gram.apply(list(a))

    def to_json(self) -> dict:
        return {
            "counit": [self.field.to_str(c) for c in self.counit],
            "symmetric": self.is_symmetric,
        }
