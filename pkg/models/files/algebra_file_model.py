from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, field_validator, model_validator

from models.algebras import AlgebraPresentation
from models.linalg import Field

Scalar = Union[str, int]


class AlgebraFileModel(BaseModel):
    """
    Model of an algebra file: structure constants as sparse (i, j, k, coefficient) triples.
    """
    field: Union[str, Dict[str, int]] = "Q"             # "Q" or {"Fp": p}
    dim: int                                            # Dimension n of the algebra
    basis: Optional[List[str]] = None                   # Basis names (default e0, e1, ...)
    unit: List[Scalar]                                  # Coordinates of 1_A
    structure: List[Tuple[int, int, int, Scalar]] = []  # e_i·e_j has coefficient c at e_k; omitted means zero

    @field_validator("dim")
    @classmethod
    def _positive_dim(cls, value: int) -> int:
        if value < 1:
            raise ValueError("dim must be positive")
        return value

    @model_validator(mode="after")
    def _check_shapes(self):
        n = self.dim
        if self.basis is not None and len(self.basis) != n:
            raise ValueError(f"basis has {len(self.basis)} names for dim {n}")
        if len(self.unit) != n:
            raise ValueError(f"unit has {len(self.unit)} coordinates for dim {n}")
        for i, j, k, _ in self.structure:
            if not all(0 <= index < n for index in (i, j, k)):
                raise ValueError(f"structure triple ({i}, {j}, {k}) is out of range for dim {n}")
        return self

    def build(self, name: str = "algebra", field: Optional[Field] = None) -> AlgebraPresentation:
        """
        Build the verified presentation. A `field` argument overrides the one in the file.
        """
        field = field or Field.parse(self.field)
        n = self.dim
        table = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, c in self.structure:
            table[i][j][k] += field.element(c)
        return AlgebraPresentation(
            field=field,
            basis_names=tuple(self.basis or [f"e{i}" for i in range(n)]),
            structure=tuple(tuple(tuple(v) for v in row) for row in table),
            unit=tuple(field.element(c) for c in self.unit),
            name=name,
        )

    @classmethod
    def from_presentation(cls, alg: AlgebraPresentation) -> "AlgebraFileModel":
        field = alg.field
        n = alg.dim
        structure = [
            (i, j, k, field.to_str(alg.structure[i][j][k]))
            for i in range(n) for j in range(n) for k in range(n)
            if alg.structure[i][j][k]
        ]
        return cls(
            field=field.to_json(),
            dim=n,
            basis=list(alg.basis_names),
            unit=[field.to_str(c) for c in alg.unit],
            structure=structure,
        )
