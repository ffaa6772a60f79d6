import logging
from typing import List, Sequence

from app.errors import DimensionMismatchError
from models.algebras import AlgebraPresentation, EnvelopingAlgebra
from models.linalg import Matrix, Vector
from services.linalg import kron


def _check_length(alg: AlgebraPresentation, *vectors: Sequence):
    for v in vectors:
        if len(v) != alg.dim:
            raise DimensionMismatchError(f"Expected a vector of length {alg.dim}, got {len(v)}.")


def multiply(alg: AlgebraPresentation, x: Vector, y: Vector) -> Vector:
    """x·y through the structure constants."""
    _check_length(alg, x, y)
    zero = alg.field.zero
    result = [zero] * alg.dim
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(alg.structure[i][j]):
                if c:
                    result[k] += ab * c
    return result


def left_regular(alg: AlgebraPresentation, a: Vector) -> Matrix:
    """Matrix of b ↦ a·b."""
    _check_length(alg, a)
    return alg.combine(a, alg.left_regular_matrices)


def right_regular(alg: AlgebraPresentation, a: Vector) -> Matrix:
    """Matrix of b ↦ b·a."""
    _check_length(alg, a)
    return alg.combine(a, alg.right_regular_matrices)


def enveloping(alg: AlgebraPresentation) -> EnvelopingAlgebra:
    """A^e with its action on A⊗A, (b⊗b')·(x⊗y) = bx ⊗ yb'."""
    left, right = alg.left_regular_matrices, alg.right_regular_matrices
    logging.debug(f"Building the enveloping algebra of {alg.name} (dim {alg.dim ** 2})")
    action = tuple(kron(left[i], right[j]) for i in range(alg.dim) for j in range(alg.dim))
    return EnvelopingAlgebra(base=alg, tensor_action=action)


def env_action_on_AA(env: EnvelopingAlgebra) -> List[Matrix]:
    return list(env.tensor_action)


def env_element_action(env: EnvelopingAlgebra, u: Vector) -> Matrix:
    """Action on A⊗A of an arbitrary element u of A^e."""
    size = env.dim
    if len(u) != size:
        raise DimensionMismatchError(f"Expected an element of A^e of length {size}, got {len(u)}.")
    return env.base.combine(u, env.tensor_action, size)


def bimodule_of_algebra(alg: AlgebraPresentation) -> List[Matrix]:
    """A as a left A^e-module: (b⊗b')·a = b·a·b', so e_i⊗e_j acts as L_i R_j."""
    left, right = alg.left_regular_matrices, alg.right_regular_matrices
    return [left[i] @ right[j] for i in range(alg.dim) for j in range(alg.dim)]
