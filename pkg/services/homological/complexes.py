import logging
from typing import Sequence

from models.complexes import CochainComplex, Coresolution, Resolution
from models.linalg import Field, Matrix
from models.modules import CheckReport
from services.linalg import image, kernel, rank


def build_cochain_complex(field: Field, spaces: Sequence[int], differentials: Sequence[Matrix]) -> CochainComplex:
    """Assemble a complex and compute its cohomology in every degree with an outgoing differential."""
    ranks = [rank(d) for d in differentials]
    dims = []
    for k, d in enumerate(differentials):
        incoming = ranks[k - 1] if k > 0 else 0
        dims.append(spaces[k] - ranks[k] - incoming)
    logging.debug(f"Cochain complex over {field}: spaces {list(spaces)}, cohomology {dims}")
    return CochainComplex(spaces=tuple(spaces), differentials=tuple(differentials), cohomology_dims=tuple(dims))


def is_complex(complex_: CochainComplex) -> bool:
    """d^{k+1}∘d^k = 0 throughout."""
    pairs = zip(complex_.differentials, complex_.differentials[1:])
    return all((second @ first).is_zero() for first, second in pairs)


def free_module_actions(ring_actions: Sequence[Matrix], rank_: int) -> list:
    field = ring_actions[0].field
    return [Matrix.block_diagonal(field, [rho] * rank_) for rho in ring_actions]


def check_resolution(res: Resolution) -> CheckReport:
    """Exactness of ... → F_1 → F_0 → P → 0 and equivariance of every map."""
    if rank(res.augmentation) != res.module_dim:
        return CheckReport.failed("augmentation is not onto", ("augmentation",))
    maps = [res.augmentation] + list(res.differentials)
    for k in range(1, len(maps)):
        if image(maps[k]) != kernel(maps[k - 1]):
            return CheckReport.failed(f"not exact at F_{k - 1}", (k - 1,))
    actions = [free_module_actions(res.ring_actions, m) for m in res.ranks]
    for u, tau in enumerate(res.module_actions):
        if res.augmentation @ actions[0][u] != tau @ res.augmentation:
            return CheckReport.failed("augmentation is not a module map", ("augmentation", u))
    for k, d in enumerate(res.differentials, start=1):
        for u in range(res.ring_dim):
            if d @ actions[k][u] != actions[k - 1][u] @ d:
                return CheckReport.failed(f"d_{k} is not a module map", (k, u))
    return CheckReport.passed()


def check_coresolution(cores: Coresolution) -> CheckReport:
    """0 → M → I^0 → I^1 → … is exact and every map commutes with the action."""
    if rank(cores.coaugmentation) != cores.module.dim:
        return CheckReport.failed("coaugmentation is not injective", ("coaugmentation",))
    maps = [cores.coaugmentation] + list(cores.differentials)
    for k in range(1, len(maps)):
        if image(maps[k - 1]) != kernel(maps[k]):
            return CheckReport.failed(f"not exact at I^{k - 1}", (k - 1,))
    sources = [cores.module] + list(cores.modules[:-1])
    for k, (m, source) in enumerate(zip(maps, sources)):
        target = cores.modules[k]
        for u, (rho_s, rho_t) in enumerate(zip(source.action, target.action)):
            if m @ rho_s != rho_t @ m:
                return CheckReport.failed(f"map out of degree {k - 1} is not a module map", (k, u))
    return CheckReport.passed()
