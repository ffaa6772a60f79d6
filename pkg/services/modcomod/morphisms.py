from typing import List

from app.errors import DimensionMismatchError, FieldMismatchError, SideMismatchError
from models.linalg import Field, Matrix, Subspace, Vector
from models.modules import ComoduleRep, ModuleRep, Side
from services.linalg import kernel, kron


def _check_map_shape(f: Matrix, source_dim: int, target_dim: int):
    if f.shape != (target_dim, source_dim):
        raise DimensionMismatchError(f"Map of shape {f.shape} between modules of dimensions {source_dim} -> {target_dim}.")


def is_module_map(f: Matrix, rep_m: ModuleRep, rep_n: ModuleRep) -> bool:
    """f∘ρ^M_i = ρ^N_i∘f for every basis element."""
    if rep_m.side is not rep_n.side:
        raise SideMismatchError("Module maps need modules on the same side.")
    _check_map_shape(f, rep_m.dim, rep_n.dim)
    return all(f @ rho_m == rho_n @ f for rho_m, rho_n in zip(rep_m.action, rep_n.action))


def is_comodule_map(f: Matrix, corep_m: ComoduleRep, corep_n: ComoduleRep) -> bool:
    """(f⊗id_A)∘∇_M = ∇_N∘f, mirrored for left comodules."""
    if corep_m.side is not corep_n.side:
        raise SideMismatchError("Comodule maps need comodules on the same side.")
    _check_map_shape(f, corep_m.dim, corep_n.dim)
    identity = Matrix.identity(f.field, corep_m.algebra_dim)
    lifted = kron(f, identity) if corep_m.side is Side.RIGHT else kron(identity, f)
    return lifted @ corep_m.coaction == corep_n.coaction @ f


def hom_system(rep_m: ModuleRep, rep_n: ModuleRep) -> Matrix:
    """
    Linear system whose kernel is Hom_A(M, N).

    A map f : M → N is flattened row-major, f[r][c] at index r·dim(M) + c.
    """
    if rep_m.side is not rep_n.side:
        raise SideMismatchError("Hom spaces need modules on the same side.")
    if rep_m.field != rep_n.field:
        raise FieldMismatchError(f"Modules over {rep_m.field} and {rep_n.field}.")
    field = rep_m.field
    dm, dn = rep_m.dim, rep_n.dim
    identity_m, identity_n = Matrix.identity(field, dm), Matrix.identity(field, dn)
    blocks = [
        kron(identity_n, rho_m.transpose()) - kron(rho_n, identity_m)
        for rho_m, rho_n in zip(rep_m.action, rep_n.action)
    ]
    return Matrix.vstack(field, blocks, dm * dn)


def module_hom_space(rep_m: ModuleRep, rep_n: ModuleRep) -> Subspace:
    """Hom_A(M, N) as a subspace of the dim(N)·dim(M) space of matrices."""
    return kernel(hom_system(rep_m, rep_n))


def vector_to_map(field: Field, v: Vector, source_dim: int, target_dim: int) -> Matrix:
    """Inverse of the row-major flattening used by module_hom_space."""
    rows = [list(v[r * source_dim:(r + 1) * source_dim]) for r in range(target_dim)]
    return Matrix._wrap(field, rows, target_dim, source_dim)


def hom_basis(rep_m: ModuleRep, rep_n: ModuleRep) -> List[Matrix]:
    space = module_hom_space(rep_m, rep_n)
    return [vector_to_map(rep_m.field, v, rep_m.dim, rep_n.dim) for v in space.vectors()]
