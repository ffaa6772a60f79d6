"""
Free resolutions of finite-dimensional modules over a finite-dimensional ring R.

R is given by its left (or right) regular representation `ring_actions`, and
a module by one matrix per basis element of R. Each step covers the current
module by R^m, sending the g-th summand generator to a chosen v_g, and passes
to the kernel with its induced action.
"""
import logging
from random import Random
from typing import List, Optional, Sequence

from app.errors import ComplexTooLargeError, DimensionMismatchError
from app.settings import get_settings
from models.complexes import Resolution
from models.linalg import Field, Matrix, Vector
from services.homological.complexes import free_module_actions
from services.linalg import kernel, restrict_action, span, zero_subspace


def _candidates(free: Sequence[int], dim: int, field: Field, rng: Random, bound: int, tries: int):
    """Unit vectors at the uncovered pivot positions in ascending order, then seeded random combinations of them."""
    for c in free:
        v = [field.zero] * dim
        v[c] = field.one
        yield v
    for _ in range(tries):
        v = [field.zero] * dim
        for c in free:
            v[c] = field.element(rng.randint(-bound, bound))
        if any(v):
            yield v


def choose_generators(actions: Sequence[Matrix], dim: int, field: Field, rng: Random, bound: int,
                      tries: int) -> List[Vector]:
    """
    Vectors whose R-translates span the module.

    Each step keeps the candidate whose cyclic submodule enlarges the covered
    part the most, a pivot vector winning ties. A cyclic submodule has
    dimension at most dim R, so a candidate reaching that gain ends the step.
    """
    covered = zero_subspace(field, dim)
    generators = []
    while covered.dim < dim:
        ceiling = min(dim, covered.dim + len(actions))
        best, best_span = None, covered
        for v in _candidates(covered.complement_coordinates(), dim, field, rng, bound, tries):
            grown = span(field, dim, covered.vectors() + [rho.apply(v) for rho in actions])
            if grown.dim > best_span.dim:
                best, best_span = v, grown
                if grown.dim == ceiling:
                    break
        generators.append(best)
        covered = best_span
    return generators


def free_resolution(
    ring_actions: Sequence[Matrix],
    ring_unit: Sequence,
    module_actions: Sequence[Matrix],
    module_dim: int,
    length: int,
    seed: Optional[int] = None,
    max_dim: Optional[int] = None,
) -> Resolution:
    """
    Resolve a module by free modules F_length → … → F_0 → P → 0.

    Args:
        ring_actions (Sequence[Matrix]): Regular representation of R, one r × r matrix per basis element.
        ring_unit (Sequence): Coordinates of 1_R.
        module_actions (Sequence[Matrix]): Action of each basis element of R on P.
        module_dim (int): dim P.
        length (int): Last degree to build.
        seed (Optional[int]): Seed of the generator choice (FROBLAB_SEED by default).
        max_dim (Optional[int]): Cap on dim F_k (FROBLAB_RESOLUTION_MAX_DIM by default).

    Raises:
        ComplexTooLargeError: If some F_k would exceed the cap.
    """
    settings = get_settings()
    seed = settings.FROBLAB_SEED if seed is None else seed
    max_dim = settings.FROBLAB_RESOLUTION_MAX_DIM if max_dim is None else max_dim
    if len(module_actions) != len(ring_actions):
        raise DimensionMismatchError("Module actions and ring basis have different sizes.")
    field = ring_actions[0].field
    r = len(ring_actions)
    rng = Random(seed)

    actions, dim, embedding = list(module_actions), module_dim, None
    ranks, maps, generator_images = [], [], []
    for k in range(length + 1):
        generators = choose_generators(actions, dim, field, rng, settings.FROBLAB_COEFF_BOUND,
                                       settings.FROBLAB_GENERATOR_TRIES)
        m = len(generators)
        if m * r > max_dim:
            raise ComplexTooLargeError(m * r, max_dim, what=f"free module F_{k}")
        cover = Matrix.from_columns(field, [rho.apply(v) for v in generators for rho in actions], dim)
        chosen = Matrix.from_columns(field, generators, dim)
        if embedding is None:
            maps.append(cover)
            generator_images.append(chosen)
        else:
            maps.append(embedding @ cover)
            generator_images.append(embedding @ chosen)
        ranks.append(m)
        logging.info(f"Resolution degree {k}: rank {m} (dimension {m * r}) covering a module of dimension {dim}")
        if k == length:
            break
        syzygies = kernel(cover)
        actions = restrict_action(free_module_actions(ring_actions, m), syzygies)
        dim, embedding = syzygies.dim, syzygies.inclusion()

    return Resolution(
        ring_actions=tuple(ring_actions),
        ring_unit=tuple(field.element(c) for c in ring_unit),
        module_actions=tuple(module_actions),
        module_dim=module_dim,
        ranks=tuple(ranks),
        augmentation=maps[0],
        differentials=tuple(maps[1:]),
        generators=tuple(generator_images),
    )
