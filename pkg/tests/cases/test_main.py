import json

import pytest

from main import EXIT_INPUT_ERROR, EXIT_OK, main, parse_job
from models.files import Command
from tests.utils import load_config, print_result

CONFIG = load_config(__file__)


@pytest.mark.parametrize("test_data", CONFIG["exit_code_tests"])
def test_exit_codes(test_data, capsys, print_results):
    code = main(test_data["argv"])
    captured = capsys.readouterr()
    print_result(test_data, {"code": code, "stdout": captured.out, "stderr": captured.err}, print_results)
    assert code == test_data["code"]
    if "stdout" in test_data:
        assert test_data["stdout"] in captured.out
    if "stderr" in test_data:
        assert test_data["stderr"] in captured.err


def test_json_output(capsys):
    assert main(["compareD", "--builtin", "exterior2", "--field", "F2", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["equal"] is True
    assert payload["field"] == {"Fp": 2}


def test_parse_job():
    spec, verbose = parse_job(["hochschild", "--builtin", "matrix", "--param", "2",
                               "--coefficients", "algebra", "--verbose"])
    assert spec.command is Command.HOCHSCHILD
    assert spec.coefficients == "algebra"
    assert verbose


def test_unknown_command_exits_through_argparse():
    with pytest.raises(SystemExit) as e:
        main(["transmogrify"])
    assert e.value.code == EXIT_INPUT_ERROR
