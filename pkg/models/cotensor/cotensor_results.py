from dataclasses import dataclass
from typing import Any, Tuple

from models.linalg import Matrix, Subspace


@dataclass(frozen=True, eq=False)
class CotensorResult:
    """φ = ∇_m⊗N − M⊗∇_n : M⊗N → M⊗A⊗N and its kernel M□N."""
    phi: Matrix
    box: Subspace

    @property
    def dim(self) -> int:
        return self.box.dim


@dataclass(frozen=True, eq=False)
class GeneratedSubmodule:
    """Least action-stable subspace containing `generator`; `rounds` counts closure passes."""
    generator: Tuple[Any, ...]
    span: Subspace
    stable: bool
    rounds: int

    @property
    def dim(self) -> int:
        return self.span.dim


@dataclass(frozen=True, eq=False)
class DComparison:
    delta_image: Subspace
    d_module: Subspace

    @property
    def equal(self) -> bool:
        return self.delta_image == self.d_module


@dataclass(frozen=True, eq=False)
class CotensorHomResult:
    """
    Both sides of M□N ≅ Hom_{A^e}(D, N⊗M).

    `hom` is the space of values f(T∘δ(1_A)) inside N⊗M; `sigma` maps it into
    M⊗N and `tau` maps M□N back into N⊗M.
    """
    box: Subspace
    hom: Subspace
    sigma: Matrix
    tau: Matrix
    verified: bool
