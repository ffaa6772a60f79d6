from typing import Callable, Dict, Optional

from models.frobenius import FrobeniusData
from models.linalg import Matrix, Vector
from services.linalg import inverse, kron, rank, swap


def right_delta_one(fd: FrobeniusData) -> Vector:
    """δ(1_A) from the right dual basis: Σ_j e_j^♭ ⊗ e_j with η(e_i, e_j^♭) = δ_ij."""
    transposed_inverse = inverse(fd.gram.transpose())
    return transposed_inverse.transpose().flatten()


def dual_basis_holds(fd: FrobeniusData) -> bool:
    """η(e_i^#, e_j) = δ_ij."""
    return fd.gram_inverse @ fd.gram == Matrix.identity(fd.field, fd.dim)


def counit_law_holds(fd: FrobeniusData) -> bool:
    """(ε⊗id)∘δ = id = (id⊗ε)∘δ."""
    identity = Matrix.identity(fd.field, fd.dim)
    eps = fd.counit_matrix()
    delta = fd.coproduct_matrix
    return kron(eps, identity) @ delta == identity and kron(identity, eps) @ delta == identity


def is_coassociative(fd: FrobeniusData) -> bool:
    """(δ⊗id)∘δ = (id⊗δ)∘δ as n³ × n matrices."""
    identity = Matrix.identity(fd.field, fd.dim)
    delta = fd.coproduct_matrix
    return kron(delta, identity) @ delta == kron(identity, delta) @ delta


def casimir_holds(fd: FrobeniusData) -> bool:
    """Σ a e_j ⊗ e_j^# = Σ e_j ⊗ e_j^# a for every basis element a."""
    alg = fd.algebra
    x = fd.gram_inverse
    return all(
        left @ x == x @ right.transpose()
        for left, right in zip(alg.left_regular_matrices, alg.right_regular_matrices)
    )


def is_bimodule_map(fd: FrobeniusData) -> bool:
    """δ(a·x·b) = (a⊗b)·δ(x), checked on the generators a⊗1 and 1⊗b."""
    alg = fd.algebra
    identity = Matrix.identity(fd.field, fd.dim)
    delta = fd.coproduct_matrix
    for left, right in zip(alg.left_regular_matrices, alg.right_regular_matrices):
        if delta @ left != kron(left, identity) @ delta:
            return False
        if delta @ right != kron(identity, right) @ delta:
            return False
    return True


def left_right_agree(fd: FrobeniusData) -> bool:
    """δ_L(1_A) = δ_R(1_A)."""
    return right_delta_one(fd) == list(fd.delta_one)


def symmetry_consistent(fd: FrobeniusData) -> bool:
    """The form is symmetric exactly when T fixes δ(1_A)."""
    fixed = swap(fd.field, fd.dim, fd.dim).apply(list(fd.delta_one)) == list(fd.delta_one)
    return fixed == fd.is_symmetric


def is_injective(fd: FrobeniusData) -> bool:
    return rank(fd.coproduct_matrix) == fd.dim


def form_is_associative(fd: FrobeniusData) -> bool:
    """ε((ab)c) = ε(a(bc))."""
    alg = fd.algebra
    return all(
        right.transpose() @ fd.gram == fd.gram @ left
        for left, right in zip(alg.left_regular_matrices, alg.right_regular_matrices)
    )


COPRODUCT_CHECKS: Dict[str, Callable[[FrobeniusData], bool]] = {
    "dual-basis": dual_basis_holds,
    "associative-form": form_is_associative,
    "counit": counit_law_holds,
    "coassociativity": is_coassociative,
    "casimir": casimir_holds,
    "bimodule-map": is_bimodule_map,
    "left-right": left_right_agree,
    "symmetry": symmetry_consistent,
    "injectivity": is_injective,
}


def find_coproduct_violation(fd: FrobeniusData) -> Optional[str]:
    """Name of the first failing coproduct check, or None."""
    for name, check in COPRODUCT_CHECKS.items():
        if not check(fd):
            return name
    return None
