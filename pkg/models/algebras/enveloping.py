from dataclasses import dataclass
from typing import List, Tuple

from models.algebras.presentation import AlgebraPresentation
from models.linalg import Matrix, Vector


@dataclass(frozen=True, eq=False)
class EnvelopingAlgebra:
    """
    A^e = A ⊗ A^op, basis e_i ⊗ e_j at index i·n + j.

    Multiplication is (a⊗a')(b⊗b') = ab ⊗ b'a'. `tensor_action[i·n + j]` is
    the action of e_i ⊗ e_j on A⊗A, (b⊗b')·(x⊗y) = bx ⊗ yb', which is also
    the left regular representation of A^e.
    """
    base: AlgebraPresentation
    tensor_action: Tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return self.base.dim ** 2

    @property
    def field(self):
        return self.base.field

    def index(self, i: int, j: int) -> int:
        return i * self.base.dim + j

    def unit_vector(self) -> Vector:
        unit = self.base.unit
        return [a * b for a in unit for b in unit]

    def structure_constants(self) -> Tuple[Tuple[Tuple, ...], ...]:
        n = self.base.dim
        c = self.base.structure
        zero = self.field.zero
        table = []
        for i in range(n):
            for j in range(n):
                row = []
                for k in range(n):
                    for l in range(n):
                        # (e_i ⊗ e_j)(e_k ⊗ e_l) = e_i e_k ⊗ e_l e_j
                        left, right = c[i][k], c[l][j]
                        row.append(tuple(
                            left[p] * right[q] if left[p] and right[q] else zero
                            for p in range(n) for q in range(n)
                        ))
                table.append(tuple(row))
        return tuple(table)

    def as_presentation(self, verify: bool = True) -> AlgebraPresentation:
        names = self.base.basis_names
        return AlgebraPresentation(
            field=self.field,
            basis_names=tuple(f"{a}⊗{b}" for a in names for b in names),
            structure=self.structure_constants(),
            unit=tuple(self.unit_vector()),
            name=f"{self.base.name}^e",
            verify=verify,
        )

    def left_factor_actions(self) -> List[Matrix]:
        """Actions of e_i ⊗ 1 on A⊗A."""
        return self._factor_actions(left=True)

    def right_factor_actions(self) -> List[Matrix]:
        """Actions of 1 ⊗ e_j on A⊗A."""
        return self._factor_actions(left=False)

    def _factor_actions(self, left: bool) -> List[Matrix]:
        n = self.base.dim
        size = n * n
        unit = self.base.unit
        result = []
        for i in range(n):
            pairs = [(self.index(i, j) if left else self.index(j, i), unit[j]) for j in range(n)]
            total = Matrix.zeros(self.field, size, size)
            for index, c in pairs:
                if c:
                    total = total + self.tensor_action[index].scale(c)
            result.append(total)
        return result
