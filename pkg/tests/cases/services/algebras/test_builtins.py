import pytest
from hypothesis import given, settings, strategies as st

import app.errors as errors
from app.errors import AxiomViolationError
from models.algebras import AlgebraPresentation
from models.linalg import Field
from services.algebras import builtin, builtin_names, multiply, parse_builtin_label
from tests.utils import load_config, print_result, to_vector

CONFIG = load_config(__file__)


def _basis_table(field, n, products):
    table = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    for i, j, k, c in products:
        table[i][j][k] += field.element(c)
    with_identity = [[list(v) for v in row] for row in table]
    for j in range(n):
        with_identity[0][j][j] = field.one
        with_identity[j][0][j] = field.one
    return tuple(tuple(tuple(v) for v in row) for row in with_identity)


@pytest.mark.parametrize("test_data", CONFIG["catalog_tests"])
def test_catalog(test_data, print_results):
    alg = builtin(test_data["label"], field=Field.parse(test_data["field"]))
    print_result(test_data, list(alg.basis_names), print_results)
    assert alg.dim == test_data["dim"]
    assert list(alg.basis_names) == test_data["names"]
    assert alg.find_axiom_violation() is None
    if test_data["default_counit"] is None:
        assert alg.default_counit is None
    else:
        assert list(alg.default_counit) == to_vector(test_data["field"], test_data["default_counit"])


@pytest.mark.parametrize("test_data", CONFIG["product_tests"])
def test_products(test_data, print_results):
    field = Field.parse(test_data["field"])
    alg = builtin(test_data["label"], field=field)
    index = {name: i for i, name in enumerate(alg.basis_names)}
    result = multiply(alg, alg.basis_vector(index[test_data["left"]]), alg.basis_vector(index[test_data["right"]]))
    expected = [field.zero] * alg.dim
    for name, c in test_data["expected"].items():
        expected[index[name]] = field.element(c)
    print_result(test_data, [field.to_str(c) for c in result], print_results)
    assert result == expected


@pytest.mark.parametrize("test_data", CONFIG["invalid_builtin_tests"])
def test_invalid_builtins(test_data):
    with pytest.raises(getattr(errors, test_data["error"])):
        builtin(test_data["name"], test_data["param"])


@pytest.mark.parametrize("test_data", CONFIG["label_tests"])
def test_parse_builtin_label(test_data):
    assert parse_builtin_label(test_data["label"]) == (test_data["name"], test_data["param"])


def test_label_parameter_matches_explicit_parameter():
    assert builtin("matrix(3)").basis_names == builtin("matrix", 3).basis_names
    assert "exterior2" in builtin_names()


@pytest.mark.parametrize("test_data", CONFIG["axiom_violation_tests"])
def test_axiom_violations(test_data, print_results):
    field = Field.rationals()
    structure = _basis_table(field, 3, test_data["products"])
    with pytest.raises(AxiomViolationError) as e:
        AlgebraPresentation(
            field=field,
            basis_names=("1", "x", "y"),
            structure=structure,
            unit=tuple(to_vector("Q", test_data["unit"])),
        )
    print_result(test_data, e.value.message, print_results)
    assert e.value.message.startswith(test_data["message_start"])
    assert e.value.location == tuple(test_data["location"])


LABELS = ["exterior2", "group_cyclic(3)", "matrix(2)", "trunc_poly(3)", "square_zero(2)"]


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from(LABELS),
    st.sampled_from(["Q", "F2", "F3"]),
    st.data(),
)
def test_multiplication_is_associative(label, field_label, data):
    alg = builtin(label, field=Field.parse(field_label))
    vectors = [
        to_vector(field_label, data.draw(st.lists(st.integers(-2, 2), min_size=alg.dim, max_size=alg.dim)))
        for _ in range(3)
    ]
    a, b, c = vectors
    assert multiply(alg, multiply(alg, a, b), c) == multiply(alg, a, multiply(alg, b, c))
    assert multiply(alg, alg.unit_vector(), a) == a
