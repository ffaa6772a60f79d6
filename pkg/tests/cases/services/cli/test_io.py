import json

import pytest

import app.errors as errors
from app.errors import InputFileNotFoundError, InvalidFormatError
from models.linalg import Field
from models.modules import Side
from services.algebras import builtin
from services.cli import (
    algebra_to_json,
    frobenius_to_json,
    load_algebra,
    load_counit,
    load_module,
    module_to_json,
    parse_algebra,
    parse_counit,
    parse_module,
    write_json,
)
from services.frobenius import frobenius_from_counit
from services.modcomod import regular_module
from tests.utils import load_config, print_result

CONFIG = load_config(__file__)


@pytest.mark.parametrize("test_data", CONFIG["algebra_file_tests"])
def test_algebra_file_round_trip(test_data, print_results, tmp_path):
    alg = builtin(test_data["label"], field=Field.parse(test_data["field"]))
    document = algebra_to_json(alg)
    print_result(test_data, document, print_results)
    path = tmp_path / "sample.json"
    write_json(str(path), document)
    loaded = load_algebra(str(path))
    assert loaded.name == "sample"
    assert loaded.field == alg.field
    assert loaded.basis_names == alg.basis_names
    assert loaded.structure == alg.structure
    assert loaded.unit == alg.unit
    assert algebra_to_json(loaded) == document


def test_algebra_document_uses_scalar_strings():
    document = algebra_to_json(builtin("exterior2", field=Field.rationals()))
    assert document["field"] == "Q"
    assert document["dim"] == 4
    assert document["unit"] == ["1", "0", "0", "0"]
    assert [2, 1, 3, "-1"] in [list(t) for t in document["structure"]]
    assert algebra_to_json(builtin("exterior2", field=Field.prime(3)))["field"] == {"Fp": 3}


@pytest.mark.parametrize("test_data", CONFIG["malformed_algebra_tests"])
def test_malformed_algebra(test_data):
    requested = Field.parse(test_data["requested"]) if "requested" in test_data else None
    with pytest.raises(getattr(errors, test_data["error"])):
        parse_algebra(test_data["document"], requested)


def test_missing_and_invalid_files(tmp_path):
    with pytest.raises(InputFileNotFoundError):
        load_algebra(str(tmp_path / "absent.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{ not json", encoding="utf-8")
    with pytest.raises(InvalidFormatError):
        load_algebra(str(broken))


def test_module_file_round_trip(tmp_path):
    alg = builtin("trunc_poly(3)", field=Field.prime(3))
    rep = regular_module(alg, Side.LEFT)
    path = tmp_path / "module.json"
    write_json(str(path), module_to_json(rep))
    assert json.loads(path.read_text(encoding="utf-8"))["side"] == "left"
    assert load_module(str(path), alg.field) == rep


@pytest.mark.parametrize("test_data", CONFIG["malformed_module_tests"])
def test_malformed_module(test_data):
    with pytest.raises(InvalidFormatError):
        parse_module(test_data["document"], Field.rationals())


def test_counit_file(tmp_path):
    alg = builtin("exterior2", field=Field.rationals())
    fd = frobenius_from_counit(alg, alg.default_counit)
    document = frobenius_to_json(fd)
    assert document == {"counit": ["0", "0", "0", "1"], "symmetric": False}
    path = tmp_path / "counit.json"
    write_json(str(path), document)
    assert load_counit(str(path), alg) == list(alg.default_counit)
    with pytest.raises(InvalidFormatError):
        parse_counit({"counit": ["1"]}, alg)
