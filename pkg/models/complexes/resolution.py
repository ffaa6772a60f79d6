from dataclasses import dataclass
from typing import Any, List, Tuple

from models.linalg import Matrix
from models.modules import ModuleRep


@dataclass(frozen=True, eq=False)
class Resolution:
    """
    A free resolution ... → F_1 → F_0 → P → 0 over a ring R of dimension r.

    F_k = R^{ranks[k]} with basis vector (g, u) at index g·r + u, the
    coefficient of the ring basis element u in the g-th summand.
    `differentials[k - 1]` is d_k : F_k → F_{k-1}. `generators[k]` holds, as
    columns, the images of the summand generators 1_R of F_k (in P for k = 0).
    """
    ring_actions: Tuple[Matrix, ...]
    ring_unit: Tuple[Any, ...]
    module_actions: Tuple[Matrix, ...]
    module_dim: int
    ranks: Tuple[int, ...]
    augmentation: Matrix
    differentials: Tuple[Matrix, ...]
    generators: Tuple[Matrix, ...]

    @property
    def ring_dim(self) -> int:
        return len(self.ring_unit)

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    @property
    def free_dims(self) -> List[int]:
        return [rank * self.ring_dim for rank in self.ranks]


@dataclass(frozen=True, eq=False)
class Coresolution:
    """
    An injective coresolution 0 → M → I^0 → I^1 → … of a module over A.

    `modules[k]` is I^k with its induced action; `coaugmentation` is M → I^0
    and `differentials[k]` is I^k → I^{k+1}.
    """
    module: ModuleRep
    modules: Tuple[ModuleRep, ...]
    coaugmentation: Matrix
    differentials: Tuple[Matrix, ...]

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    @property
    def dims(self) -> List[int]:
        return [m.dim for m in self.modules]
