import pytest

from app.utils import format_tensor, format_vector, tensor_names
from models.linalg import Field
from tests.utils import load_config, print_result, to_vector

CONFIG = load_config(__file__)


@pytest.mark.parametrize("test_data", CONFIG["vector_tests"])
def test_format_vector(test_data, print_results):
    field = Field.parse(test_data["field"])
    text = format_vector(field, test_data["names"], to_vector(test_data["field"], test_data["vector"]))
    print_result(test_data, text, print_results)
    assert text == test_data["expected"]


@pytest.mark.parametrize("test_data", CONFIG["tensor_tests"])
def test_format_tensor(test_data, print_results):
    field = Field.parse(test_data["field"])
    size = len(test_data["left"]) * len(test_data["right"])
    vector = [field.zero] * size
    for index, value in test_data["entries"].items():
        vector[int(index)] = field.element(value)
    text = format_tensor(field, test_data["left"], test_data["right"], vector)
    print_result(test_data, text, print_results)
    assert text == test_data["expected"]


def test_tensor_names_follow_flat_index_order():
    assert tensor_names(["a", "b"], ["x", "y", "z"]) == ["a⊗x", "a⊗y", "a⊗z", "b⊗x", "b⊗y", "b⊗z"]
