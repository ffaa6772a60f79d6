from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from app.errors import DimensionMismatchError
from models.linalg import Field, Matrix


class Side(str, Enum):
    RIGHT = "right"
    LEFT = "left"

    @property
    def opposite(self) -> "Side":
        return Side.LEFT if self is Side.RIGHT else Side.RIGHT


@dataclass(frozen=True, eq=False)
class ModuleRep:
    """
    A module over an n-dimensional algebra given by one d × d matrix per basis element.

    Vectors are columns on both sides; `action[i]` is v ↦ v·e_i for right
    modules and v ↦ e_i·v for left modules.
    """
    field: Field
    side: Side
    dim: int
    action: Tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "side", Side(self.side))
        for rho in self.action:
            if rho.shape != (self.dim, self.dim):
                raise DimensionMismatchError(
                    f"Action matrix of shape {rho.shape} on a module of dimension {self.dim}."
                )

    @property
    def algebra_dim(self) -> int:
        return len(self.action)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleRep):
            return NotImplemented
        return (self.field == other.field and self.side == other.side and self.dim == other.dim
                and list(self.action) == list(other.action))


@dataclass(frozen=True, eq=False)
class ComoduleRep:
    """
    A comodule over the coalgebra of a Frobenius algebra.

    The coaction is (d·n) × d for right comodules (M → M⊗A) and (n·d) × d for
    left comodules (N → A⊗N).
    """
    field: Field
    side: Side
    dim: int
    algebra_dim: int
    coaction: Matrix

    def __post_init__(self):
        object.__setattr__(self, "side", Side(self.side))
        expected = (self.dim * self.algebra_dim, self.dim)
        if self.coaction.shape != expected:
            raise DimensionMismatchError(f"Coaction of shape {self.coaction.shape}, expected {expected}.")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComoduleRep):
            return NotImplemented
        return (self.field == other.field and self.side == other.side and self.dim == other.dim
                and self.algebra_dim == other.algebra_dim and self.coaction == other.coaction)
