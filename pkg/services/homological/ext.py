import logging
from typing import List, Optional, Sequence

from app.settings import get_settings
from models.algebras import EnvelopingAlgebra
from models.complexes import CochainComplex, Resolution
from models.frobenius import FrobeniusData
from models.linalg import Matrix, linear_combination
from models.modules import ModuleRep, Side
from services.algebras import enveloping
from services.cotensor import bimodule_action, d_module
from services.homological.complexes import build_cochain_complex
from services.homological.resolution import free_resolution
from services.linalg import restrict_action
from services.modcomod import require_module


def hom_complex(res: Resolution, target_actions: Sequence[Matrix], target_dim: int) -> CochainComplex:
    """
    Hom_R(F_•, X) with Hom_R(R^m, X) identified with X^m through the values on the summand generators.

    For a generator h of F_{k+1} with d(h) = Σ_{g,u} c_{g,u}(h)·e_u b_g, the block (h, g)
    of d^k is Σ_u c_{g,u}(h) σ_u, where σ_u is the action on X.
    """
    field = res.augmentation.field
    r = res.ring_dim
    spaces = [m * target_dim for m in res.ranks]
    differentials = []
    for k in range(res.length):
        source_rank, target_rank = res.ranks[k], res.ranks[k + 1]
        images = res.generators[k + 1].to_rows()
        block_rows = []
        for h in range(target_rank):
            blocks = [
                linear_combination(field, [images[g * r + u][h] for u in range(r)],
                                   target_actions, target_dim, target_dim)
                for g in range(source_rank)
            ]
            block_rows.append(Matrix.hstack(field, blocks, target_dim))
        differentials.append(Matrix.vstack(field, block_rows, spaces[k]))
    return build_cochain_complex(field, spaces, differentials)


def resolve_d(fd: FrobeniusData, length: int, env: EnvelopingAlgebra = None,
              seed: Optional[int] = None) -> Resolution:
    """Free resolution of D over A^e."""
    env = env or enveloping(fd.algebra)
    d = d_module(fd, env).span
    return free_resolution(
        env.tensor_action,
        env.unit_vector(),
        restrict_action(env.tensor_action, d),
        d.dim,
        length,
        seed=seed,
    )


def ext(fd: FrobeniusData, rep_m: ModuleRep, rep_n: ModuleRep, max_deg: Optional[int] = None,
        env: EnvelopingAlgebra = None, seed: Optional[int] = None) -> List[int]:
    """dim Ext^k_{A^e}(D, N⊗M) for k = 0..max_deg."""
    max_deg = get_settings().FROBLAB_MAX_DEG if max_deg is None else max_deg
    require_module(fd.algebra, rep_m, Side.RIGHT)
    require_module(fd.algebra, rep_n, Side.LEFT)
    env = env or enveloping(fd.algebra)
    target_actions = bimodule_action(rep_n, rep_m)
    res = resolve_d(fd, max_deg + 1, env, seed)
    dims = list(hom_complex(res, target_actions, rep_n.dim * rep_m.dim).cohomology_dims)
    logging.info(f"Ext over {fd.algebra.name}^e: {dims}")
    return dims
