"""
Passage between A-modules and A-comodules for a Frobenius algebra A.

A right module M becomes a right comodule through ∇_m(v) = Σ_j (v·e_j) ⊗ e_j^#,
and a right comodule becomes a right module through v·a = (id⊗ε)(v_(0) ⊗ v_(1)a).
The left-sided versions use ∇(v) = Σ_j e_j ⊗ e_j^#·v and a·v = ε(a v_(-1)) v_(0).
The two constructions are mutually inverse and preserve morphisms.
"""
from models.frobenius import FrobeniusData
from models.linalg import Matrix
from models.modules import ComoduleRep, ModuleRep, Side
from services.linalg import kron
from services.modcomod.checks import require_comodule, require_module


def module_to_comodule(fd: FrobeniusData, rep: ModuleRep, check: bool = True) -> ComoduleRep:
    if check:
        require_module(fd.algebra, rep)
    field, n, d = fd.field, fd.dim, rep.dim
    dual = fd.gram_inverse
    total = Matrix.zeros(field, d * n, d)
    if rep.side is Side.RIGHT:
        for j in range(n):
            total = total + kron(rep.action[j], Matrix.column_vector(field, dual.row(j)))
    else:
        for b in range(n):
            total = total + kron(Matrix.column_vector(field, dual.column(b)), rep.action[b])
    return ComoduleRep(field=field, side=rep.side, dim=d, algebra_dim=n, coaction=total)


def comodule_to_module(fd: FrobeniusData, corep: ComoduleRep, check: bool = True) -> ModuleRep:
    if check:
        require_comodule(fd, corep)
    field, n, d = fd.field, fd.dim, corep.dim
    identity = Matrix.identity(field, d)
    gram = fd.gram
    action = []
    for i in range(n):
        if corep.side is Side.RIGHT:
            # v·e_i = Σ v_(0) ε(v_(1) e_i)
            pairing = Matrix.row_vector(field, gram.column(i))
            action.append(kron(identity, pairing) @ corep.coaction)
        else:
            pairing = Matrix.row_vector(field, gram.row(i))
            action.append(kron(pairing, identity) @ corep.coaction)
    return ModuleRep(field=field, side=corep.side, dim=d, action=tuple(action))
