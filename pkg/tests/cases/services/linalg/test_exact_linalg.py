import pytest
from hypothesis import assume, given, settings, strategies as st

from app.errors import DimensionMismatchError, InvalidParameterValueError, VerificationFailedError
from models.linalg import Field, Matrix
from services.linalg import (
    flat_index,
    image,
    induced_map,
    inverse,
    kernel,
    kron,
    rank,
    rref,
    solve,
    span,
    stable_span,
    subspace_contains,
    subspace_equal,
    subspace_intersect,
    subspace_sum,
    swap,
    tensor_permute,
)
from tests.utils import load_config, print_result, to_matrix, to_vector

CONFIG = load_config(__file__)

FIELDS = [Field.rationals(), Field.prime(2), Field.prime(3), Field.prime(5)]


def small_matrices(max_size=4):
    """Integer matrices of shape up to max_size × max_size, paired with a field."""
    return st.tuples(
        st.sampled_from(FIELDS),
        st.integers(1, max_size),
        st.integers(1, max_size),
    ).flatmap(lambda t: st.tuples(
        st.just(t[0]),
        st.lists(st.lists(st.integers(-3, 3), min_size=t[2], max_size=t[2]), min_size=t[1], max_size=t[1]),
    ))


@pytest.mark.parametrize("test_data", CONFIG["rank_tests"])
def test_rank_and_kernel(test_data, print_results):
    m = to_matrix(test_data["field"], test_data["rows"])
    k = kernel(m)
    print_result(test_data, {"rank": rank(m), "kernel": k.to_strings()}, print_results)
    assert rank(m) == test_data["expected_rank"]
    assert k.dim == m.cols - test_data["expected_rank"]
    assert all(not any(m.apply(v)) for v in k.vectors())


@pytest.mark.parametrize("test_data", CONFIG["inverse_tests"])
def test_inverse(test_data, print_results):
    m = to_matrix(test_data["field"], test_data["rows"])
    result = inverse(m)
    print_result(test_data, result.to_strings() if result else None, print_results)
    if test_data["expected"] is None:
        assert result is None
    else:
        assert result == to_matrix(test_data["field"], test_data["expected"])
        assert m @ result == Matrix.identity(m.field, m.rows)


def test_inverse_of_rectangular_matrix_is_rejected():
    with pytest.raises(DimensionMismatchError):
        inverse(to_matrix("Q", [[1, 2, 3]]))


@pytest.mark.parametrize("test_data", CONFIG["solve_tests"])
def test_solve(test_data, print_results):
    m = to_matrix(test_data["field"], test_data["rows"])
    rhs = to_vector(test_data["field"], test_data["rhs"])
    x = solve(m, rhs)
    print_result(test_data, x and [m.field.to_str(c) for c in x], print_results)
    if test_data["solvable"]:
        assert x is not None and m.apply(x) == rhs
    else:
        assert x is None


@pytest.mark.parametrize("test_data", CONFIG["kron_tests"])
def test_kron(test_data, print_results):
    a = to_matrix(test_data["field"], test_data["a"])
    b = to_matrix(test_data["field"], test_data["b"])
    result = kron(a, b)
    print_result(test_data, result.to_strings(), print_results)
    assert result == to_matrix(test_data["field"], test_data["expected"])


@pytest.mark.parametrize("test_data", CONFIG["permute_tests"])
def test_tensor_permute_moves_basis_vectors(test_data, print_results):
    field = Field.rationals()
    dims, perm = test_data["dims"], test_data["perm"]
    p = tensor_permute(field, dims, perm)
    source = flat_index(dims, test_data["source"])
    out_dims = [dims[i - 1] for i in perm]
    target = flat_index(out_dims, test_data["target"])
    print_result(test_data, {"source": source, "target": target}, print_results)
    column = p.column(source)
    assert column[target] == field.one
    assert sum(1 for c in column if c) == 1


@pytest.mark.parametrize("perm", [(1, 1), (1, 3), (2,)])
def test_tensor_permute_rejects_non_permutations(perm):
    with pytest.raises(InvalidParameterValueError):
        tensor_permute(Field.rationals(), [2, 2], perm)


@pytest.mark.parametrize("test_data", CONFIG["subspace_tests"])
def test_subspace_sum_and_intersection(test_data, print_results):
    field = Field.parse(test_data["field"])
    first = span(field, 4, [to_vector(test_data["field"], v) for v in test_data["first"]])
    second = span(field, 4, [to_vector(test_data["field"], v) for v in test_data["second"]])
    total, common = subspace_sum(first, second), subspace_intersect(first, second)
    print_result(test_data, {"sum": total.to_strings(), "intersection": common.to_strings()}, print_results)
    assert total.dim == test_data["sum_dim"]
    assert common.dim == test_data["intersection_dim"]
    assert first.dim + second.dim == total.dim + common.dim


def test_span_is_canonical():
    field = Field.rationals()
    a = span(field, 3, [to_vector("Q", [1, 1, 0]), to_vector("Q", [0, 1, 1])])
    b = span(field, 3, [to_vector("Q", [1, 2, 1]), to_vector("Q", [1, 0, -1])])
    assert a == b
    assert a.pivots == (0, 1)


def test_induced_map_refuses_maps_leaving_the_target():
    field = Field.rationals()
    line = span(field, 2, [to_vector("Q", [1, 0])])
    flip = to_matrix("Q", [[0, 1], [1, 0]])
    with pytest.raises(VerificationFailedError):
        induced_map(flip, line, line)


def test_stable_span_closes_under_the_action():
    # nilpotent shift on K^3: e0 -> e1 -> e2 -> 0
    shift = to_matrix("Q", [[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    closure, rounds = stable_span([shift], [to_vector("Q", [1, 0, 0])], 3, Field.rationals())
    assert closure.dim == 3
    assert rounds == 3

    # already stable: one pass that adds nothing
    _, rounds = stable_span([shift], [to_vector("Q", [0, 0, 1])], 3, Field.rationals())
    assert rounds == 1


@settings(max_examples=40, deadline=None)
@given(small_matrices())
def test_rank_nullity(data):
    field, rows = data
    m = Matrix.from_rows(field, rows)
    assert rank(m) + kernel(m).dim == m.cols
    assert image(m).dim == rank(m)
    reduced, pivots = rref(m)
    assert reduced.rows == len(pivots)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_kron_mixed_product(field, data):
    def draw(rows, cols):
        entries = st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=rows, max_size=rows)
        return Matrix.from_rows(field, data.draw(entries))

    p, q, r, s, t, u = (data.draw(st.integers(1, 3)) for _ in range(6))
    a, c = draw(p, q), draw(q, r)
    b, d = draw(s, t), draw(t, u)
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4))
def test_swap_is_an_involution(dim_x, dim_y):
    field = Field.rationals()
    assert swap(field, dim_y, dim_x) @ swap(field, dim_x, dim_y) == Matrix.identity(field, dim_x * dim_y)


@settings(max_examples=40, deadline=None)
@given(small_matrices())
def test_rref_is_idempotent(data):
    field, rows = data
    reduced, pivots = rref(Matrix.from_rows(field, rows))
    assert rref(reduced) == (reduced, pivots)


@settings(max_examples=30, deadline=None)
@given(st.permutations([1, 2, 3]), st.permutations([1, 2, 3]), st.lists(st.integers(1, 3), min_size=3, max_size=3))
def test_tensor_permute_composes(sigma, tau, dims):
    field = Field.rationals()
    permuted_dims = [dims[s - 1] for s in sigma]
    composite = [sigma[t - 1] for t in tau]
    assert (tensor_permute(field, permuted_dims, tau) @ tensor_permute(field, dims, sigma)
            == tensor_permute(field, dims, composite))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4))
def test_rational_results_reduce_to_prime_field_results(p, rows):
    rationals, residues = Field.rationals(), Field.prime(p)
    over_q, over_p = Matrix.from_rows(rationals, rows), Matrix.from_rows(residues, rows)
    assert rank(over_p) <= rank(over_q)
    inverse_p = inverse(over_p)
    assume(inverse_p is not None)
    reduced = [[residues.element(rationals.to_str(c)) for c in row] for row in inverse(over_q).to_rows()]
    assert Matrix.from_rows(residues, reduced) == inverse_p


def test_subspace_equality_and_membership():
    field = Field.prime(3)
    plane = span(field, 3, [to_vector("F3", [1, 1, 0]), to_vector("F3", [0, 1, 1])])
    same = span(field, 3, [to_vector("F3", [1, 2, 1]), to_vector("F3", [1, 0, 2])])
    line = span(field, 3, [to_vector("F3", [1, 1, 0])])
    assert subspace_equal(plane, same)
    assert not subspace_equal(plane, line)
    assert subspace_contains(plane, to_vector("F3", [2, 0, 1]))
    assert not subspace_contains(line, to_vector("F3", [0, 0, 1]))
    with pytest.raises(DimensionMismatchError):
        subspace_equal(plane, span(field, 2, [to_vector("F3", [1, 0])]))
