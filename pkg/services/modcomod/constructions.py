"""
Module factories: regular, free, dual, simple and seeded random sub- and quotient modules.

Random modules are cut out of a free module A^k by closing a few random
vectors under the action, so every sample is a genuine module by construction.
"""
import logging
from random import Random
from typing import List, Optional

from app.errors import HypothesisViolatedError, InvalidParameterValueError
from app.settings import get_settings
from models.algebras import AlgebraPresentation
from models.linalg import Matrix, Vector
from models.modules import ModuleRep, Side
from services.linalg import quotient_action, rank, restrict_action, stable_span


def regular_module(alg: AlgebraPresentation, side: Side = Side.RIGHT) -> ModuleRep:
    side = Side(side)
    action = alg.right_regular_matrices if side is Side.RIGHT else alg.left_regular_matrices
    return ModuleRep(field=alg.field, side=side, dim=alg.dim, action=tuple(action))


def free_module(alg: AlgebraPresentation, rank_: int, side: Side = Side.RIGHT) -> ModuleRep:
    """A^rank_ with the regular action on each summand."""
    if rank_ < 0:
        raise InvalidParameterValueError(f"Free module rank must be non-negative, got {rank_}.")
    regular = regular_module(alg, side)
    action = tuple(Matrix.block_diagonal(alg.field, [rho] * rank_) for rho in regular.action)
    return ModuleRep(field=alg.field, side=regular.side, dim=alg.dim * rank_, action=action)


def dual_module(rep: ModuleRep) -> ModuleRep:
    """M* with (a·f)(v) = f(v·a) for right M (and mirrored for left M); the action is transposed."""
    return ModuleRep(field=rep.field, side=rep.side.opposite, dim=rep.dim,
                     action=tuple(rho.transpose() for rho in rep.action))


def _random_vectors(alg: AlgebraPresentation, rng: Random, size: int, count: int, bound: int) -> List[Vector]:
    vectors = []
    while len(vectors) < count:
        v = [alg.field.random_element(rng, bound) for _ in range(size)]
        if any(v):
            vectors.append(v)
    return vectors


def _random_closure(alg: AlgebraPresentation, rng: Random, side: Side, free_rank: int,
                    generators: int, bound: Optional[int]):
    bound = get_settings().FROBLAB_COEFF_BOUND if bound is None else bound
    free = free_module(alg, free_rank, side)
    vectors = _random_vectors(alg, rng, free.dim, generators, bound)
    sub, _ = stable_span(free.action, vectors, free.dim, alg.field)
    return free, sub


def random_submodule(alg: AlgebraPresentation, rng: Random, side: Side = Side.RIGHT,
                     free_rank: int = 1, generators: int = 1, bound: int = None) -> ModuleRep:
    """Submodule of A^free_rank generated by random vectors, in its canonical basis."""
    free, sub = _random_closure(alg, rng, Side(side), free_rank, generators, bound)
    logging.debug(f"Random {free.side.value} submodule of dimension {sub.dim} in A^{free_rank} over {alg.name}")
    return ModuleRep(field=alg.field, side=free.side, dim=sub.dim,
                     action=tuple(restrict_action(free.action, sub)))


def random_quotient(alg: AlgebraPresentation, rng: Random, side: Side = Side.RIGHT,
                    free_rank: int = 1, generators: int = 1, bound: int = None) -> ModuleRep:
    """Quotient of A^free_rank by a randomly generated submodule."""
    free, sub = _random_closure(alg, rng, Side(side), free_rank, generators, bound)
    logging.debug(f"Random {free.side.value} quotient of dimension {free.dim - sub.dim} of A^{free_rank} over {alg.name}")
    return ModuleRep(field=alg.field, side=free.side, dim=free.dim - sub.dim,
                     action=tuple(quotient_action(free.action, sub)))


def random_module(alg: AlgebraPresentation, rng: Random, side: Side = Side.RIGHT) -> ModuleRep:
    """A nonzero module: a cyclic submodule of A or A², or the quotient of A² by one."""
    if rng.random() < 0.5:
        return random_submodule(alg, rng, side, free_rank=rng.choice((1, 2)))
    return random_quotient(alg, rng, side, free_rank=2)


def _scalar_part(alg: AlgebraPresentation, m: Matrix):
    """The unique eigenvalue of a scalar-plus-nilpotent matrix."""
    field = alg.field
    n = m.rows
    if field.is_finite:
        identity = Matrix.identity(field, n)
        for t in range(field.characteristic):
            if rank(m - identity.scale(t)) < n:
                return field.element(t)
        raise HypothesisViolatedError(f"{alg.name} is not local: an element has no eigenvalue in {field}.")
    trace = field.zero
    for i in range(n):
        trace += m.entry(i, i)
    return trace / field.element(n)


def simple_module(alg: AlgebraPresentation, side: Side = Side.RIGHT) -> ModuleRep:
    """
    The one-dimensional simple module of a local algebra whose top is the ground field.

    Raises:
        HypothesisViolatedError: If the algebra is not local with a one-dimensional top.
    """
    field = alg.field
    character = [_scalar_part(alg, left) for left in alg.left_regular_matrices]
    unit_value = field.zero
    for u, x in zip(alg.unit, character):
        unit_value += u * x
    if unit_value != field.one:
        raise HypothesisViolatedError(f"{alg.name} has no one-dimensional simple module of this kind.")
    for i in range(alg.dim):
        for j in range(alg.dim):
            product_value = field.zero
            for c, x in zip(alg.structure[i][j], character):
                if c and x:
                    product_value += c * x
            if product_value != character[i] * character[j]:
                raise HypothesisViolatedError(f"{alg.name} has no one-dimensional simple module of this kind.")
    action = tuple(Matrix.from_rows(field, [[x]]) for x in character)
    return ModuleRep(field=field, side=Side(side), dim=1, action=action)
