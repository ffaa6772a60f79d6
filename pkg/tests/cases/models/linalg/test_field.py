import pytest

import app.errors as errors
from app.errors import InvalidFormatError
from models.linalg import Field
from tests.utils import load_config, print_result

CONFIG = load_config(__file__)


@pytest.mark.parametrize("test_data", CONFIG["parse_tests"])
def test_parse(test_data, print_results):
    field = Field.parse(test_data["spec"])
    print_result(test_data, field.label, print_results)
    assert field.characteristic == test_data["characteristic"]
    assert Field.parse(field.to_json()) == field


@pytest.mark.parametrize("test_data", CONFIG["invalid_parse_tests"])
def test_parse_rejects(test_data):
    with pytest.raises(getattr(errors, test_data["error"])):
        Field.parse(test_data["spec"])


@pytest.mark.parametrize("test_data", CONFIG["scalar_tests"])
def test_scalar_strings(test_data, print_results):
    field = Field.parse(test_data["field"])
    if test_data["expected"] is None:
        with pytest.raises(InvalidFormatError):
            field.element(test_data["value"])
        return
    value = field.element(test_data["value"])
    print_result(test_data, field.to_str(value), print_results)
    assert field.to_str(value) == test_data["expected"]
    assert field.element(field.to_str(value)) == value


def test_booleans_are_not_scalars():
    with pytest.raises(InvalidFormatError):
        Field.rationals().element(True)
