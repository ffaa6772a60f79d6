from typing import List, Union

from pydantic import BaseModel, model_validator

from models.linalg import Field, Matrix
from models.modules import ModuleRep, Side

Scalar = Union[str, int]


class ModuleFileModel(BaseModel):
    """
    Model of a module file: one d × d matrix per basis element of the algebra.
    """
    side: Side                          # "right" or "left"
    dim: int                            # Dimension d of the module
    action: List[List[List[Scalar]]]    # action[i] is the matrix of e_i, row by row

    @model_validator(mode="after")
    def _check_shapes(self):
        if self.dim < 0:
            raise ValueError("dim must not be negative")
        for i, rows in enumerate(self.action):
            if len(rows) != self.dim or any(len(row) != self.dim for row in rows):
                raise ValueError(f"action[{i}] is not a {self.dim}x{self.dim} matrix")
        return self

    def build(self, field: Field) -> ModuleRep:
        action = tuple(Matrix.from_rows(field, rows, self.dim) for rows in self.action)
        return ModuleRep(field=field, side=self.side, dim=self.dim, action=action)

    @classmethod
    def from_rep(cls, rep: ModuleRep) -> "ModuleFileModel":
        return cls(side=rep.side, dim=rep.dim, action=[rho.to_strings() for rho in rep.action])
