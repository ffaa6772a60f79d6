import logging
from typing import List, Sequence, Tuple

from app.errors import DimensionMismatchError, SideMismatchError
from models.algebras import EnvelopingAlgebra
from models.cotensor import CotensorResult, DComparison, GeneratedSubmodule
from models.frobenius import FrobeniusData
from models.linalg import Matrix, Vector
from models.modules import ModuleRep, Side
from services.algebras import enveloping
from services.frobenius import delta_image
from services.linalg import kernel, kron, stable_span, subspace_includes, swap
from services.modcomod import module_to_comodule, regular_module, require_module


def cotensor(fd: FrobeniusData, rep_m: ModuleRep, rep_n: ModuleRep) -> CotensorResult:
    """
    M□N for a right module M and a left module N, through their comodule structures.

    Raises:
        SideMismatchError: If M is not a right module or N not a left one.
        AxiomViolationError: If either input is not a module.
    """
    alg = fd.algebra
    require_module(alg, rep_m, Side.RIGHT)
    require_module(alg, rep_n, Side.LEFT)
    field = fd.field
    nabla_m = module_to_comodule(fd, rep_m, check=False).coaction
    nabla_n = module_to_comodule(fd, rep_n, check=False).coaction
    phi = (kron(nabla_m, Matrix.identity(field, rep_n.dim))
           - kron(Matrix.identity(field, rep_m.dim), nabla_n))
    box = kernel(phi)
    logging.debug(f"Cotensor over {alg.name}: dim M={rep_m.dim}, dim N={rep_n.dim}, dim M□N={box.dim}")
    return CotensorResult(phi=phi, box=box)


def generate_submodule(actions: Sequence[Matrix], generator: Vector) -> GeneratedSubmodule:
    """Least subspace containing `generator` and stable under every matrix in `actions`."""
    size = len(generator)
    if any(rho.shape != (size, size) for rho in actions):
        raise DimensionMismatchError(f"Action matrices must be {size} x {size}.")
    field = actions[0].field
    generator = [field.element(value) for value in generator]
    sub, rounds = stable_span(actions, [generator], size, field)
    stable = all(sub.contains(rho.apply(v)) for rho in actions for v in sub.vectors())
    return GeneratedSubmodule(generator=tuple(generator), span=sub, stable=stable, rounds=rounds)


def twisted_delta_one(fd: FrobeniusData) -> Vector:
    """T∘δ(1_A), the generator of D."""
    return swap(fd.field, fd.dim, fd.dim).apply(list(fd.delta_one))


def delta_submodule(fd: FrobeniusData, env: EnvelopingAlgebra = None) -> GeneratedSubmodule:
    """δ(A) as the cyclic A^e-submodule of A⊗A on δ(1_A)."""
    env = env or enveloping(fd.algebra)
    return generate_submodule(env.tensor_action, list(fd.delta_one))


def d_module(fd: FrobeniusData, env: EnvelopingAlgebra = None) -> GeneratedSubmodule:
    """D, the A^e-submodule of A⊗A generated by T∘δ(1_A)."""
    env = env or enveloping(fd.algebra)
    return generate_submodule(env.tensor_action, twisted_delta_one(fd))


def compare_D_deltaA(fd: FrobeniusData, env: EnvelopingAlgebra = None) -> DComparison:
    env = env or enveloping(fd.algebra)
    comparison = DComparison(delta_image=delta_image(fd), d_module=d_module(fd, env).span)
    logging.info(f"D and δ(A) on {fd.algebra.name} over {fd.field}: equal={comparison.equal}")
    return comparison


def box_equals_delta_image(fd: FrobeniusData, box=None) -> Tuple[bool, bool]:
    """
    Both inclusions of A□A = δ(A).

    δ(A) ⊆ A□A by coassociativity; conversely x ∈ A□A equals (ε⊗δ)(x) = Σ ε(a_i)δ(b_i).
    """
    alg = fd.algebra
    if box is None:
        box = cotensor(fd, regular_module(alg, Side.RIGHT), regular_module(alg, Side.LEFT)).box
    image = delta_image(fd)
    recover = kron(fd.counit_matrix(), fd.coproduct_matrix)
    forward = subspace_includes(box, image)
    backward = all(
        recover.apply(x) == x and image.contains(x)
        for x in box.vectors()
    )
    return forward, backward


def bimodule_action(rep_n: ModuleRep, rep_m: ModuleRep) -> List[Matrix]:
    """
    N⊗M as a left A^e-module for left N and right M: (b⊗b')·(n⊗m) = bn ⊗ mb'.

    The action of e_i ⊗ e_j sits at index i·dim(A) + j.
    """
    if rep_n.side is not Side.LEFT or rep_m.side is not Side.RIGHT:
        raise SideMismatchError("N⊗M needs a left module N and a right module M.")
    return [kron(rho_n, rho_m) for rho_n in rep_n.action for rho_m in rep_m.action]
