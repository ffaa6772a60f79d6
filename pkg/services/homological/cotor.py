import logging
from typing import List, Optional

from app.errors import InvalidParameterValueError
from app.settings import get_settings
from models.algebras import AlgebraPresentation
from models.complexes import CochainComplex, Coresolution
from models.frobenius import FrobeniusData
from models.linalg import Matrix
from models.modules import ModuleRep, Side
from services.cotensor import cotensor
from services.homological.complexes import build_cochain_complex, free_module_actions
from services.homological.resolution import free_resolution
from services.linalg import induced_map, kron
from services.modcomod import dual_module, require_module


def injective_coresolution(alg: AlgebraPresentation, rep: ModuleRep, length: int,
                           seed: Optional[int] = None) -> Coresolution:
    """
    0 → M → I^0 → … → I^length, the dual of a free resolution of M*.

    Each I^k is a sum of copies of A*, which is injective because A* ≅ A for a Frobenius algebra.
    """
    require_module(alg, rep)
    dual = dual_module(rep)
    regular = alg.left_regular_matrices if dual.side is Side.LEFT else alg.right_regular_matrices
    res = free_resolution(regular, alg.unit, dual.action, dual.dim, length, seed=seed)
    modules = tuple(
        ModuleRep(field=alg.field, side=rep.side, dim=m * alg.dim,
                  action=tuple(rho.transpose() for rho in free_module_actions(regular, m)))
        for m in res.ranks
    )
    logging.info(f"Injective coresolution over {alg.name}: dims {[m.dim for m in modules]}")
    return Coresolution(
        module=rep,
        modules=modules,
        coaugmentation=res.augmentation.transpose(),
        differentials=tuple(d.transpose() for d in res.differentials),
    )


def cotor_complex(fd: FrobeniusData, rep_m: ModuleRep, rep_n: ModuleRep, max_deg: int,
                  resolve: str = "first", seed: Optional[int] = None) -> CochainComplex:
    """
    Apply −□N to a coresolution of M (or M□− to one of N with resolve="second").
    """
    alg, field = fd.algebra, fd.field
    require_module(alg, rep_m, Side.RIGHT)
    require_module(alg, rep_n, Side.LEFT)
    if resolve == "first":
        cores = injective_coresolution(alg, rep_m, max_deg + 1, seed)
        boxes = [cotensor(fd, module, rep_n).box for module in cores.modules]
        identity = Matrix.identity(field, rep_n.dim)
        lifted = [kron(d, identity) for d in cores.differentials]
    elif resolve == "second":
        cores = injective_coresolution(alg, rep_n, max_deg + 1, seed)
        boxes = [cotensor(fd, rep_m, module).box for module in cores.modules]
        identity = Matrix.identity(field, rep_m.dim)
        lifted = [kron(identity, d) for d in cores.differentials]
    else:
        raise InvalidParameterValueError(f"resolve must be 'first' or 'second', got {resolve!r}.")
    differentials = [induced_map(m, source, target) for m, source, target in zip(lifted, boxes, boxes[1:])]
    return build_cochain_complex(field, [box.dim for box in boxes], differentials)


def cotor_direct(fd: FrobeniusData, rep_m: ModuleRep, rep_n: ModuleRep, max_deg: Optional[int] = None,
                 resolve: str = "first", seed: Optional[int] = None) -> List[int]:
    """dim Cotor^k_A(M, N) for k = 0..max_deg, as the cohomology of a coresolution cotensored with the other argument."""
    max_deg = get_settings().FROBLAB_MAX_DEG if max_deg is None else max_deg
    dims = list(cotor_complex(fd, rep_m, rep_n, max_deg, resolve, seed).cohomology_dims)
    logging.info(f"Cotor over {fd.algebra.name} (resolving the {resolve} argument): {dims}")
    return dims
