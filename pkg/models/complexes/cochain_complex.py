from dataclasses import dataclass
from typing import Tuple

from models.linalg import Matrix


@dataclass(frozen=True, eq=False)
class CochainComplex:
    """
    C^0 → C^1 → … with `differentials[k]` : C^k → C^{k+1}.

    `cohomology_dims[k]` = dim ker d^k − rank d^{k-1}, for every k that has an outgoing differential.
    """
    spaces: Tuple[int, ...]
    differentials: Tuple[Matrix, ...]
    cohomology_dims: Tuple[int, ...]


@dataclass(frozen=True)
class FunctorResult:
    """Serialized as {"functor": ..., "dims": [...]}."""
    functor: str
    dims: Tuple[int, ...]

    def to_json(self) -> dict:
        return {"functor": self.functor, "dims": list(self.dims)}


@dataclass(frozen=True)
class HochschildComparison:
    """Ext_{A^e}(D, N⊗M) against H^*(A, N⊗M), plus the check that A ≅ D."""
    ext_dims: Tuple[int, ...]
    hochschild_dims: Tuple[int, ...]
    algebra_isomorphic_to_d: bool

    @property
    def holds(self) -> bool:
        return self.algebra_isomorphic_to_d and self.ext_dims == self.hochschild_dims
