from dataclasses import dataclass, field as dataclass_field
from typing import Any, List, Optional, Tuple

from app.errors import DimensionMismatchError, FieldMismatchError
from models.linalg.field import Field
from models.linalg.matrix import Matrix, Vector


@dataclass(frozen=True, eq=False)
class Subspace:
    """
    A subspace of K^ambient_dim stored by its canonical RREF basis.

    Rows of `basis` are the basis vectors, in reduced row-echelon form with
    ascending pivots, so two subspaces are equal exactly when their bases are.
    Build instances with `services.linalg.span`, never by hand.
    """
    field: Field
    ambient_dim: int
    basis: Tuple[Tuple[Any, ...], ...]
    pivots: Tuple[int, ...]
    _pivot_set: frozenset = dataclass_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.basis) != len(self.pivots):
            raise DimensionMismatchError("One pivot per basis vector is required.")
        object.__setattr__(self, "_pivot_set", frozenset(self.pivots))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> List[Vector]:
        return [list(row) for row in self.basis]

    def basis_matrix(self) -> Matrix:
        """Basis vectors as rows."""
        return Matrix._wrap(self.field, self.vectors(), self.dim, self.ambient_dim)

    def inclusion(self) -> Matrix:
        """Basis vectors as columns: the embedding K^dim → K^ambient_dim."""
        return Matrix.from_columns(self.field, self.vectors(), self.ambient_dim)

    def _check(self, vector: Vector):
        if len(vector) != self.ambient_dim:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} in ambient dimension {self.ambient_dim}."
            )

    def reduce(self, vector: Vector) -> Vector:
        """Residual of `vector` after clearing every pivot coordinate with the basis."""
        self._check(vector)
        residual = list(vector)
        for row, pivot in zip(self.basis, self.pivots):
            c = residual[pivot]
            if c:
                for j in range(pivot, self.ambient_dim):
                    if row[j]:
                        residual[j] -= c * row[j]
        return residual

    def contains(self, vector: Vector) -> bool:
        return all(not value for value in self.reduce(vector))

    def coordinates(self, vector: Vector) -> Optional[Vector]:
        """Coordinates in the RREF basis (pivot read-off), or None when not contained."""
        if not self.contains(vector):
            return None
        return [vector[p] for p in self.pivots]

    def complement_coordinates(self) -> List[int]:
        """Non-pivot positions; the matching unit vectors span a complement."""
        return [j for j in range(self.ambient_dim) if j not in self._pivot_set]

    def quotient_coordinates(self, vector: Vector) -> Vector:
        """Coordinates of the class of `vector` in K^ambient / self."""
        residual = self.reduce(vector)
        return [residual[j] for j in self.complement_coordinates()]

    def same_ambient(self, other: "Subspace"):
        if self.field != other.field:
            raise FieldMismatchError(f"Subspaces over {self.field} and {other.field}.")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"Ambient dimensions {self.ambient_dim} and {other.ambient_dim} differ."
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.pivots == other.pivots and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.pivots))

    def to_strings(self) -> List[List[str]]:
        return [[self.field.to_str(value) for value in row] for row in self.basis]
