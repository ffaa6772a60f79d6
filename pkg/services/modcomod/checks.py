from app.errors import AxiomViolationError, FieldMismatchError, SideMismatchError
from models.algebras import AlgebraPresentation
from models.frobenius import FrobeniusData
from models.linalg import Matrix
from models.modules import CheckReport, ComoduleRep, ModuleRep, Side
from services.linalg import kron


def check_module(alg: AlgebraPresentation, rep: ModuleRep) -> CheckReport:
    """
    Check the unit law and associativity of a module structure.

    Right modules need Σ_k c[i][j][k] ρ_k = ρ_j·ρ_i, left modules Σ_k c[i][j][k] ρ_k = ρ_i·ρ_j.
    The report names the first failing pair (i, j).
    """
    if rep.field != alg.field:
        return CheckReport.failed(f"module over {rep.field}, algebra over {alg.field}")
    if rep.algebra_dim != alg.dim:
        return CheckReport.failed(f"{rep.algebra_dim} action matrices for an algebra of dimension {alg.dim}")
    rho = rep.action
    if alg.combine(alg.unit, rho, rep.dim) != Matrix.identity(rep.field, rep.dim):
        return CheckReport.failed("unit does not act as identity", ("unit",))
    for i in range(alg.dim):
        for j in range(alg.dim):
            expected = alg.combine(alg.structure[i][j], rho, rep.dim)
            actual = rho[j] @ rho[i] if rep.side is Side.RIGHT else rho[i] @ rho[j]
            if expected != actual:
                names = alg.basis_names
                return CheckReport.failed(
                    f"{rep.side.value} action of {names[i]}·{names[j]} is not the composite", (i, j)
                )
    return CheckReport.passed()


def check_comodule(fd: FrobeniusData, corep: ComoduleRep) -> CheckReport:
    """Coassociativity and counit law of a coaction."""
    if corep.field != fd.field:
        return CheckReport.failed(f"comodule over {corep.field}, coalgebra over {fd.field}")
    if corep.algebra_dim != fd.dim:
        return CheckReport.failed(f"coaction into an algebra of dimension {corep.algebra_dim}, expected {fd.dim}")
    field = fd.field
    identity_d = Matrix.identity(field, corep.dim)
    identity_n = Matrix.identity(field, fd.dim)
    delta, eps, nabla = fd.coproduct_matrix, fd.counit_matrix(), corep.coaction
    if corep.side is Side.RIGHT:
        coassociative = kron(identity_d, delta) @ nabla == kron(nabla, identity_n) @ nabla
        counital = kron(identity_d, eps) @ nabla == identity_d
    else:
        coassociative = kron(delta, identity_d) @ nabla == kron(identity_n, nabla) @ nabla
        counital = kron(eps, identity_d) @ nabla == identity_d
    if not coassociative:
        return CheckReport.failed("coaction is not coassociative", ("coassociativity",))
    if not counital:
        return CheckReport.failed("counit does not split the coaction", ("counit",))
    return CheckReport.passed()


def require_module(alg: AlgebraPresentation, rep: ModuleRep, side: Side = None) -> None:
    """Raise unless `rep` is a module over `alg` (on `side`, when given)."""
    if rep.field != alg.field:
        raise FieldMismatchError(f"Module over {rep.field} for an algebra over {alg.field}.")
    if side is not None and rep.side is not Side(side):
        raise SideMismatchError(f"Expected a {Side(side).value} module, got a {rep.side.value} one.")
    report = check_module(alg, rep)
    if not report.ok:
        raise AxiomViolationError(f"Not a module: {report.message}", location=report.location)


def require_comodule(fd: FrobeniusData, corep: ComoduleRep) -> None:
    report = check_comodule(fd, corep)
    if not report.ok:
        raise AxiomViolationError(f"Not a comodule: {report.message}", location=report.location)
