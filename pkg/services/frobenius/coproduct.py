"""
Coproduct of a Frobenius algebra built from the dual basis of its form.

For a functional ε with invertible Gram matrix G, the left dual basis is
given by the rows of G⁻¹ and δ(1_A) = Σ_j e_j ⊗ e_j^# is G⁻¹ read row-major.
The coproduct of a basis element is then δ(e_i) = Σ_j e_i e_j ⊗ e_j^#, the
row-major flattening of L_i·G⁻¹.
"""
import logging
from typing import Sequence

from app.errors import DegenerateFormError, DimensionMismatchError, VerificationFailedError
from models.algebras import AlgebraPresentation
from models.frobenius import FrobeniusData
from models.linalg import Matrix, Subspace, Vector
from services.frobenius.axioms import find_coproduct_violation
from services.linalg import image, inverse


def gram_matrix(alg: AlgebraPresentation, counit: Sequence) -> Matrix:
    """G[i][j] = ε(e_i·e_j)."""
    if len(counit) != alg.dim:
        raise DimensionMismatchError(f"Counit of length {len(counit)} for an algebra of dimension {alg.dim}.")
    field = alg.field
    eps = [field.element(c) for c in counit]
    rows = []
    for i in range(alg.dim):
        row = []
        for j in range(alg.dim):
            total = field.zero
            for c, e in zip(alg.structure[i][j], eps):
                if c and e:
                    total += c * e
            row.append(total)
        rows.append(row)
    return Matrix.from_rows(field, rows)


def frobenius_from_counit(alg: AlgebraPresentation, counit: Sequence, verify: bool = True) -> FrobeniusData:
    """
    Build the Frobenius structure of a functional.

    Args:
        alg (AlgebraPresentation): The algebra.
        counit (Sequence): Coefficients of ε (ints, "p/q" strings or field scalars).
        verify (bool): Check every coproduct axiom on the result.

    Raises:
        DegenerateFormError: If the Gram matrix of ε is singular.
        VerificationFailedError: If the constructed coproduct fails one of its axioms.
    """
    field = alg.field
    eps = tuple(field.element(c) for c in counit)
    gram = gram_matrix(alg, eps)
    gram_inverse = inverse(gram)
    if gram_inverse is None:
        raise DegenerateFormError(
            f"The form of ε = {[field.to_str(c) for c in eps]} on {alg.name} is degenerate."
        )
    columns = [(left @ gram_inverse).flatten() for left in alg.left_regular_matrices]
    fd = FrobeniusData(
        algebra=alg,
        counit=eps,
        gram=gram,
        gram_inverse=gram_inverse,
        delta_one=tuple(gram_inverse.flatten()),
        coproduct_matrix=Matrix.from_columns(field, columns, alg.dim ** 2),
    )
    if verify:
        violation = find_coproduct_violation(fd)
        if violation is not None:
            raise VerificationFailedError(f"Coproduct on {alg.name} fails the {violation} check.")
    logging.debug(f"Frobenius structure on {alg.name}: symmetric={fd.is_symmetric}")
    return fd


def coproduct(fd: FrobeniusData, a: Vector) -> Vector:
    """δ(a) = (a⊗1)·δ(1_A)."""
    if len(a) != fd.dim:
        raise DimensionMismatchError(f"Expected a vector of length {fd.dim}, got {len(a)}.")
    return fd.coproduct_matrix.apply(list(a))


def coproduct_matrix(fd: FrobeniusData) -> Matrix:
    return fd.coproduct_matrix


def delta_image(fd: FrobeniusData) -> Subspace:
    """δ(A) inside A⊗A."""
    return image(fd.coproduct_matrix)

