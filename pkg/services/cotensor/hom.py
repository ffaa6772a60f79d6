"""
Hom out of a cyclic A^e-module and the isomorphism M□N ≅ Hom_{A^e}(D, N⊗M).

A map out of the cyclic module ⟨g⟩ is fixed by its value e on g, and e is a
legal value exactly when r·e = 0 for every r in the annihilator of g.
"""
import logging
from typing import Sequence

from app.errors import DimensionMismatchError, VerificationFailedError
from models.algebras import EnvelopingAlgebra
from models.cotensor import CotensorHomResult
from models.frobenius import FrobeniusData
from models.linalg import Matrix, Subspace, Vector, linear_combination
from models.modules import ModuleRep
from services.algebras import enveloping
from services.cotensor.cotensor import bimodule_action, cotensor, twisted_delta_one
from services.linalg import full_space, kernel, span, stable_span, swap, zero_subspace


def annihilator(actions: Sequence[Matrix], generator: Vector) -> Subspace:
    """{r : Σ r_k ρ_k g = 0}, inside the coefficient space of the ring."""
    field = actions[0].field
    columns = [rho.apply(list(generator)) for rho in actions]
    return kernel(Matrix.from_columns(field, columns, len(generator)))


def hom_from_cyclic(actions: Sequence[Matrix], generator: Vector,
                    target_action: Sequence[Matrix], target_dim: int) -> Subspace:
    """
    Values e in the target of A^e-maps ⟨g⟩ → target, f ↦ f(g).

    Args:
        actions (Sequence[Matrix]): Ring basis actions on the ambient space of g.
        generator (Vector): The generator g.
        target_action (Sequence[Matrix]): The same ring basis acting on the target.
        target_dim (int): Dimension of the target.

    Raises:
        VerificationFailedError: If ⟨g⟩ is not spanned by the ring translates of g.
    """
    if len(actions) != len(target_action):
        raise DimensionMismatchError("Source and target actions come from rings of different dimensions.")
    field = actions[0].field
    if target_dim == 0:
        return zero_subspace(field, 0)
    translates = span(field, len(generator), [rho.apply(list(generator)) for rho in actions])
    closure, _ = stable_span(actions, [list(generator)], len(generator), field)
    if translates != closure:
        raise VerificationFailedError("The ring translates of the generator do not span its submodule.")
    relations = annihilator(actions, generator)
    if relations.dim == 0:
        return full_space(field, target_dim)
    blocks = [
        linear_combination(field, r, target_action, target_dim, target_dim)
        for r in relations.vectors()
    ]
    return kernel(Matrix.vstack(field, blocks, target_dim))


def cotensor_hom_iso(fd: FrobeniusData, rep_m: ModuleRep, rep_n: ModuleRep,
                     env: EnvelopingAlgebra = None) -> CotensorHomResult:
    """
    Compute M□N and Hom_{A^e}(D, N⊗M) independently and check that the factor swaps identify them.

    Raises:
        VerificationFailedError: If a swap leaves its target space or the dimensions differ.
    """
    env = env or enveloping(fd.algebra)
    field = fd.field
    box = cotensor(fd, rep_m, rep_n).box
    target_action = bimodule_action(rep_n, rep_m)
    target_dim = rep_n.dim * rep_m.dim
    hom = hom_from_cyclic(env.tensor_action, twisted_delta_one(fd), target_action, target_dim)
    sigma = swap(field, rep_n.dim, rep_m.dim)
    tau = swap(field, rep_m.dim, rep_n.dim)

    problems = []
    if box.dim != hom.dim:
        problems.append(f"dim M□N = {box.dim} but dim Hom = {hom.dim}")
    if not all(box.contains(sigma.apply(e)) for e in hom.vectors()):
        problems.append("σ leaves M□N")
    if not all(hom.contains(tau.apply(z)) for z in box.vectors()):
        problems.append("τ leaves Hom")
    if not all(sigma.apply(tau.apply(z)) == z for z in box.vectors()):
        problems.append("σ∘τ is not the identity")
    if not all(tau.apply(sigma.apply(e)) == e for e in hom.vectors()):
        problems.append("τ∘σ is not the identity")
    if problems:
        raise VerificationFailedError(f"M□N ≅ Hom(D, N⊗M) failed on {fd.algebra.name}: {'; '.join(problems)}")

    logging.info(f"M□N ≅ Hom(D, N⊗M) on {fd.algebra.name}: dimension {box.dim}")
    return CotensorHomResult(box=box, hom=hom, sigma=sigma, tau=tau, verified=True)
