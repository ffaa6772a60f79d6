"""
Hochschild cohomology through the unnormalized bar complex.

A cochain f in C^k = Hom(A^{⊗k}, X) is stored as a vector indexed by
(a_1, …, a_k, p) at flat index multi·dim(X) + p, multi being the flat index
of (a_1, …, a_k) in A^{⊗k}. The differential is
(df)(a_0, …, a_k) = a_0·f(a_1, …) + Σ_i (−1)^i f(…, a_{i−1}a_i, …) + (−1)^{k+1} f(…, a_{k−1})·a_k.
"""
import logging
from typing import List, Optional, Sequence

from app.errors import ComplexTooLargeError, HypothesisViolatedError
from app.settings import get_settings
from models.algebras import AlgebraPresentation, EnvelopingAlgebra
from models.complexes import CochainComplex, HochschildComparison
from models.frobenius import FrobeniusData
from models.linalg import Matrix
from models.modules import ModuleRep
from services.algebras import bimodule_of_algebra, enveloping
from services.cotensor import annihilator, bimodule_action, d_module, twisted_delta_one
from services.homological.complexes import build_cochain_complex
from services.homological.ext import ext
from services.linalg import image, kron, kron_all, rank


def side_actions(alg: AlgebraPresentation, bimodule: Sequence[Matrix], dim: int):
    """Left actions x ↦ e_i·x and right actions x ↦ x·e_i of a bimodule given as a left A^e-module."""
    n = alg.dim
    left = [alg.combine(alg.unit, [bimodule[i * n + j] for j in range(n)], dim) for i in range(n)]
    right = [alg.combine(alg.unit, [bimodule[j * n + i] for j in range(n)], dim) for i in range(n)]
    return left, right


def hochschild_complex(alg: AlgebraPresentation, bimodule: Sequence[Matrix], dim: int, max_deg: int,
                       max_dim: Optional[int] = None) -> CochainComplex:
    """
    Bar cochain complex C^0 → … → C^{max_deg+1} of A with coefficients in a bimodule.

    Raises:
        ComplexTooLargeError: If dim C^{max_deg+1} exceeds the cap.
    """
    max_dim = get_settings().FROBLAB_HOCHSCHILD_MAX_DIM if max_dim is None else max_dim
    n, field = alg.dim, alg.field
    top = n ** (max_deg + 1) * dim
    if top > max_dim:
        raise ComplexTooLargeError(top, max_dim, what=f"bar cochain space C^{max_deg + 1}")
    left, right = side_actions(alg, bimodule, dim)
    identity_x = Matrix.identity(field, dim)
    identity_a = Matrix.identity(field, n)
    mu = alg.multiplication_matrix
    right_stack = Matrix.vstack(field, right, dim)

    differentials = []
    for k in range(max_deg + 1):
        identity_k = Matrix.identity(field, n ** k)
        total = Matrix.vstack(field, [kron(identity_k, lam) for lam in left], n ** k * dim)
        for i in range(1, k + 1):
            merge = kron_all(field, [identity_a] * (i - 1) + [mu] + [identity_a] * (k - i))
            term = kron(merge.transpose(), identity_x)
            total = total - term if i % 2 else total + term
        last = kron(identity_k, right_stack)
        total = total - last if k % 2 == 0 else total + last
        differentials.append(total)
    spaces = [n ** k * dim for k in range(max_deg + 2)]
    return build_cochain_complex(field, spaces, differentials)


def hochschild(alg: AlgebraPresentation, bimodule: Sequence[Matrix], dim: int,
               max_deg: Optional[int] = None) -> List[int]:
    """dim H^k(A, X) for k = 0..max_deg."""
    max_deg = get_settings().FROBLAB_MAX_DEG if max_deg is None else max_deg
    dims = list(hochschild_complex(alg, bimodule, dim, max_deg).cohomology_dims)
    logging.info(f"Hochschild cohomology of {alg.name}: {dims}")
    return dims


def algebra_isomorphic_to_d(fd: FrobeniusData, env: EnvelopingAlgebra = None) -> bool:
    """
    Check that 1_A ↦ T∘δ(1_A) extends to an isomorphism of A^e-modules A → D.

    A is cyclic on 1_A, so the map is well defined and injective exactly when 1_A
    and T∘δ(1_A) have the same annihilator; it is onto when its image is D.
    """
    alg = fd.algebra
    env = env or enveloping(alg)
    generator = twisted_delta_one(fd)
    same_annihilator = (annihilator(bimodule_of_algebra(alg), list(alg.unit))
                        == annihilator(env.tensor_action, generator))
    n = alg.dim
    columns = [
        alg.combine(alg.unit, [env.tensor_action[k * n + j] for j in range(n)], n * n).apply(generator)
        for k in range(n)
    ]
    phi = Matrix.from_columns(alg.field, columns, n * n)
    d = d_module(fd, env).span
    return same_annihilator and rank(phi) == n and image(phi) == d


def verify_cotor_is_hochschild(fd: FrobeniusData, rep_m: ModuleRep, rep_n: ModuleRep,
                               max_deg: Optional[int] = None, env: EnvelopingAlgebra = None,
                               seed: Optional[int] = None) -> HochschildComparison:
    """
    Compare Ext_{A^e}(D, N⊗M) with H^*(A, N⊗M) on a symmetric Frobenius algebra.

    Raises:
        HypothesisViolatedError: If the Frobenius form is not symmetric.
    """
    if not fd.is_symmetric:
        raise HypothesisViolatedError(f"The Frobenius form on {fd.algebra.name} over {fd.field} is not symmetric.")
    max_deg = get_settings().FROBLAB_MAX_DEG if max_deg is None else max_deg
    env = env or enveloping(fd.algebra)
    ext_dims = ext(fd, rep_m, rep_n, max_deg, env, seed)
    hochschild_dims = hochschild(fd.algebra, bimodule_action(rep_n, rep_m), rep_n.dim * rep_m.dim, max_deg)
    return HochschildComparison(
        ext_dims=tuple(ext_dims),
        hochschild_dims=tuple(hochschild_dims),
        algebra_isomorphic_to_d=algebra_isomorphic_to_d(fd, env),
    )
