from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from app.errors import DimensionMismatchError
from models.linalg import Field, Matrix, linear_combination
from services.algebras import (
    bimodule_of_algebra,
    builtin,
    env_action_on_AA,
    env_element_action,
    enveloping,
    left_regular,
    multiply,
    right_regular,
)
from tests.utils import cases, load_config, print_result, to_vector

CONFIG = load_config(__file__)

EXTERIOR = builtin("exterior2", field=Field.rationals())
INDEX = {name: i for i, name in enumerate(EXTERIOR.basis_names)}


def _expected(size, names, coefficients):
    field = EXTERIOR.field
    v = [field.zero] * size
    for name, c in coefficients.items():
        v[names.index(name)] = field.element(c)
    return v


@pytest.mark.parametrize("test_data", cases(CONFIG["enveloping_tests"]))
def test_enveloping_is_an_algebra(test_data, print_results):
    alg = builtin(test_data["label"], field=Field.parse(test_data["field"]))
    env = enveloping(alg)
    presentation = env.as_presentation(verify=True)
    print_result(test_data, presentation.basis_names, print_results)
    assert env.dim == test_data["dim"]
    assert presentation.dim == test_data["dim"]
    assert env_element_action(env, env.unit_vector()) == Matrix.identity(alg.field, env.dim)


@pytest.mark.parametrize("test_data", CONFIG["tensor_action_tests"])
def test_tensor_action(test_data, print_results):
    env = enveloping(EXTERIOR)
    names = [f"{a}⊗{b}" for a in EXTERIOR.basis_names for b in EXTERIOR.basis_names]
    b, b_op = test_data["acting"]
    x, y = test_data["target"]
    action = env.tensor_action[env.index(INDEX[b], INDEX[b_op])]
    result = action.column(env.index(INDEX[x], INDEX[y]))
    print_result(test_data, [EXTERIOR.field.to_str(c) for c in result], print_results)
    assert result == _expected(16, names, test_data["expected"])


@pytest.mark.parametrize("test_data", CONFIG["bimodule_tests"])
def test_algebra_as_bimodule(test_data, print_results):
    actions = bimodule_of_algebra(EXTERIOR)
    b, b_op = test_data["acting"]
    result = actions[INDEX[b] * EXTERIOR.dim + INDEX[b_op]].column(INDEX[test_data["target"]])
    print_result(test_data, [EXTERIOR.field.to_str(c) for c in result], print_results)
    assert result == _expected(4, list(EXTERIOR.basis_names), test_data["expected"])


def test_regular_representations_match_multiplication():
    alg = builtin("matrix(2)")
    field = alg.field
    a = [field.element(c) for c in (1, 2, 0, -1)]
    b = [field.element(c) for c in (0, 1, 3, 1)]
    assert left_regular(alg, a).apply(b) == multiply(alg, a, b)
    assert right_regular(alg, a).apply(b) == multiply(alg, b, a)


def test_factor_actions_commute():
    env = enveloping(EXTERIOR)
    for left in env.left_factor_actions():
        for right in env.right_factor_actions():
            assert left @ right == right @ left


def test_length_mismatch():
    with pytest.raises(DimensionMismatchError):
        multiply(EXTERIOR, EXTERIOR.unit_vector(), [EXTERIOR.field.one])
    with pytest.raises(DimensionMismatchError):
        env_element_action(enveloping(EXTERIOR), EXTERIOR.unit_vector())


LABELS = ["exterior2", "trunc_poly(3)", "group_cyclic(3)", "matrix(2)"]


@lru_cache(maxsize=None)
def _algebra(label, field_label):
    return builtin(label, field=Field.parse(field_label))


@lru_cache(maxsize=None)
def _enveloping(label, field_label):
    env = enveloping(_algebra(label, field_label))
    return env, env.as_presentation(verify=False)


def _draw(data, field_label, size):
    return to_vector(field_label, data.draw(st.lists(st.integers(-3, 3), min_size=size, max_size=size)))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(LABELS), st.sampled_from(["Q", "F2", "F3"]), st.data())
def test_regular_representations_respect_products(label, field_label, data):
    alg = _algebra(label, field_label)
    a, b = _draw(data, field_label, alg.dim), _draw(data, field_label, alg.dim)
    ab = multiply(alg, a, b)
    assert left_regular(alg, ab) == left_regular(alg, a) @ left_regular(alg, b)
    assert right_regular(alg, ab) == right_regular(alg, b) @ right_regular(alg, a)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(LABELS), st.sampled_from(["Q", "F2"]), st.data())
def test_action_on_tensors_is_a_representation(label, field_label, data):
    env, presentation = _enveloping(label, field_label)
    actions = env_action_on_AA(env)
    u, v = _draw(data, field_label, env.dim), _draw(data, field_label, env.dim)

    def rho(w):
        return linear_combination(env.field, w, actions, env.dim, env.dim)

    assert len(actions) == env.dim
    assert rho(multiply(presentation, u, v)) == rho(u) @ rho(v)
    assert rho(u) == env_element_action(env, u)
