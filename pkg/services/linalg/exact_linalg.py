"""
Exact dense linear algebra over Q and GF(p).

Row reduction is delegated to sympy's `DomainMatrix.rref`; everything else
(kernels, images, Kronecker products, factor permutations, subspace algebra)
is built on top of the canonical RREF it returns. Tensor products use one
index convention throughout the code base: the basis vector (i, j) of X⊗Y
sits at flat index i·dim(Y) + j.
"""
from itertools import product
from math import prod
from typing import List, Optional, Sequence, Tuple

from app.errors import DimensionMismatchError, InvalidParameterValueError, VerificationFailedError
from models.linalg import Field, Matrix, Subspace, Vector


def rref(m: Matrix) -> Tuple[Matrix, List[int]]:
    """
    Reduced row-echelon form with zero rows removed, and the pivot columns.
    """
    if m.rows == 0 or m.cols == 0:
        return Matrix.zeros(m.field, 0, m.cols), []
    reduced, pivots = m.rep.rref()
    pivots = list(pivots)
    rows = [list(row) for row in reduced.to_list()[:len(pivots)]]
    one = m.field.one
    for i, pivot in enumerate(pivots):
        lead = rows[i][pivot]
        if lead != one:
            rows[i] = [value / lead for value in rows[i]]
    return Matrix._wrap(m.field, rows, len(pivots), m.cols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def span(field: Field, ambient_dim: int, vectors: Sequence[Vector]) -> Subspace:
    """Canonical subspace spanned by `vectors` inside K^ambient_dim."""
    vectors = [list(v) for v in vectors]
    if any(len(v) != ambient_dim for v in vectors):
        raise DimensionMismatchError(f"Spanning vectors must have length {ambient_dim}.")
    if not vectors or ambient_dim == 0:
        return Subspace(field, ambient_dim, (), ())
    reduced, pivots = rref(Matrix._wrap(field, vectors, len(vectors), ambient_dim))
    return Subspace(field, ambient_dim, tuple(tuple(row) for row in reduced.to_rows()), tuple(pivots))


def zero_subspace(field: Field, ambient_dim: int) -> Subspace:
    return Subspace(field, ambient_dim, (), ())


def full_space(field: Field, ambient_dim: int) -> Subspace:
    return span(field, ambient_dim, Matrix.identity(field, ambient_dim).to_rows())


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m·v = 0}; its dimension is cols − rank."""
    reduced, pivots = rref(m)
    field = m.field
    pivot_set = set(pivots)
    rows = reduced.to_rows()
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [field.zero] * m.cols
        v[free] = field.one
        for row, pivot in zip(rows, pivots):
            if row[free]:
                v[pivot] = -row[free]
        vectors.append(v)
    return span(field, m.cols, vectors)


def image(m: Matrix) -> Subspace:
    """Column space of m."""
    return span(m.field, m.rows, m.columns())


def solve(m: Matrix, rhs: Vector) -> Optional[Vector]:
    """Some solution x of m·x = rhs, or None when the system is inconsistent."""
    if len(rhs) != m.rows:
        raise DimensionMismatchError(f"Right-hand side of length {len(rhs)} for matrix {m.shape}.")
    field = m.field
    if m.cols == 0:
        return [] if all(not value for value in rhs) else None
    augmented = Matrix.hstack(field, [m, Matrix.column_vector(field, rhs)])
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [field.zero] * m.cols
    for row, pivot in zip(reduced.to_rows(), pivots):
        x[pivot] = row[m.cols]
    return x


def inverse(m: Matrix) -> Optional[Matrix]:
    """Inverse of a square matrix, or None when it is singular."""
    if m.rows != m.cols:
        raise DimensionMismatchError(f"Cannot invert a {m.shape} matrix.")
    n = m.rows
    augmented = Matrix.hstack(m.field, [m, Matrix.identity(m.field, n)])
    reduced, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        return None
    return Matrix._wrap(m.field, [row[n:] for row in reduced.to_rows()], n, n)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: entry ((i, k), (j, l)) = a[i][j]·b[k][l]."""
    a._check_field(b)
    field = a.field
    zero = field.zero
    a_rows, b_rows = a.to_rows(), b.to_rows()
    rows = []
    for a_row in a_rows:
        for b_row in b_rows:
            row = []
            for x in a_row:
                if x:
                    row.extend(x * y for y in b_row)
                else:
                    row.extend([zero] * b.cols)
            rows.append(row)
    return Matrix._wrap(field, rows, a.rows * b.rows, a.cols * b.cols)


def kron_all(field: Field, factors: Sequence[Matrix]) -> Matrix:
    result = Matrix.identity(field, 1)
    for factor in factors:
        result = kron(result, factor)
    return result


def flat_index(dims: Sequence[int], multi: Sequence[int]) -> int:
    index = 0
    for d, x in zip(dims, multi):
        index = index * d + x
    return index


def tensor_permute(field: Field, dims: Sequence[int], perm: Sequence[int]) -> Matrix:
    """
    Permutation matrix reordering tensor factors.

    `perm` is one-based: output factor j is input factor perm[j], so (2, 1)
    is the swap T of X⊗Y and (1, 4, 3, 2) sends a⊗b⊗c⊗d to a⊗d⊗c⊗b.
    """
    if len(perm) != len(dims):
        raise InvalidParameterValueError(f"Permutation {tuple(perm)} does not match {len(dims)} factors.")
    if sorted(perm) != list(range(1, len(dims) + 1)):
        raise InvalidParameterValueError(f"{tuple(perm)} is not a permutation.")
    out_dims = [dims[p - 1] for p in perm]
    size = prod(dims)
    rows = [[field.zero] * size for _ in range(size)]
    for multi in product(*(range(d) for d in dims)):
        out_multi = [multi[p - 1] for p in perm]
        rows[flat_index(out_dims, out_multi)][flat_index(dims, multi)] = field.one
    return Matrix._wrap(field, rows, size, size)


def swap(field: Field, dim_x: int, dim_y: int) -> Matrix:
    """The canonical involution X⊗Y → Y⊗X."""
    return tensor_permute(field, [dim_x, dim_y], (2, 1))


def subspace_equal(s1: Subspace, s2: Subspace) -> bool:
    s1.same_ambient(s2)
    return s1 == s2


def subspace_contains(s: Subspace, vector: Vector) -> bool:
    return s.contains(vector)


def subspace_includes(big: Subspace, small: Subspace) -> bool:
    big.same_ambient(small)
    return all(big.contains(v) for v in small.vectors())


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    s1.same_ambient(s2)
    return span(s1.field, s1.ambient_dim, s1.vectors() + s2.vectors())


def subspace_intersect(s1: Subspace, s2: Subspace) -> Subspace:
    s1.same_ambient(s2)
    field = s1.field
    if s1.dim == 0 or s2.dim == 0:
        return zero_subspace(field, s1.ambient_dim)
    columns = s1.vectors() + [[-value for value in v] for v in s2.vectors()]
    relations = kernel(Matrix.from_columns(field, columns, s1.ambient_dim))
    vectors = []
    for relation in relations.vectors():
        v = [field.zero] * s1.ambient_dim
        for c, b in zip(relation[:s1.dim], s1.vectors()):
            if c:
                v = [x + c * y for x, y in zip(v, b)]
        vectors.append(v)
    return span(field, s1.ambient_dim, vectors)


def induced_map(m: Matrix, source: Subspace, target: Subspace) -> Matrix:
    """
    Matrix of m restricted to `source` and corestricted to `target`, in their RREF bases.

    Raises:
        VerificationFailedError: If m does not send `source` into `target`.
    """
    if m.cols != source.ambient_dim or m.rows != target.ambient_dim:
        raise DimensionMismatchError(
            f"Map of shape {m.shape} between ambient dimensions {source.ambient_dim} -> {target.ambient_dim}."
        )
    moved = m @ source.inclusion()
    # coordinates in an RREF basis are the entries at the pivot positions
    restricted = moved.select_rows(target.pivots)
    if target.inclusion() @ restricted != moved:
        raise VerificationFailedError("Map does not send the source subspace into the target.")
    return restricted


def restrict_action(actions: Sequence[Matrix], s: Subspace) -> List[Matrix]:
    """Matrices of the actions on an invariant subspace, in its RREF basis."""
    try:
        return [induced_map(rho, s, s) for rho in actions]
    except VerificationFailedError:
        raise VerificationFailedError("Subspace is not stable under the action.")


def quotient_action(actions: Sequence[Matrix], s: Subspace) -> List[Matrix]:
    """Matrices of the induced actions on K^ambient / s, basis the non-pivot unit vectors."""
    field = s.field
    complement = s.complement_coordinates()
    quotient = []
    for rho in actions:
        if not all(s.contains(rho.apply(v)) for v in s.vectors()):
            raise VerificationFailedError("Subspace is not stable under the action.")
        columns = [s.quotient_coordinates(rho.column(c)) for c in complement]
        quotient.append(Matrix.from_columns(field, columns, len(complement)))
    return quotient


def stable_span(actions: Sequence[Matrix], vectors: Sequence[Vector], ambient_dim: int,
                field: Field) -> Tuple[Subspace, int]:
    """
    Least subspace containing `vectors` and stable under every action matrix.

    Returns the subspace and the number of closure rounds it took. Every round
    but the last adds at least one dimension, so there are at most
    ambient_dim − dim span(vectors) + 1 of them.
    """
    current = span(field, ambient_dim, [v for v in vectors if any(v)])
    frontier = current.vectors()
    rounds = 0
    while frontier:
        rounds += 1
        added = []
        for v in frontier:
            for rho in actions:
                residual = current.reduce(rho.apply(v))
                if any(residual):
                    current = span(field, ambient_dim, current.vectors() + [residual])
                    added.append(residual)
        frontier = added
    return current, rounds
