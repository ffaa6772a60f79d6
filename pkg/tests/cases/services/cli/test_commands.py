import json

import pytest
from pydantic import ValidationError

import app.errors as errors
from app.errors import FieldMismatchError
from models.files import JobSpec
from models.linalg import Field
from models.modules import Side
from services.algebras import builtin
from services.cli import algebra_to_json, module_to_json, run_command, write_json
from services.modcomod import simple_module
from tests.utils import load_config, print_result

CONFIG = load_config(__file__)


@pytest.mark.parametrize("test_data", CONFIG["report_tests"])
def test_reports(test_data, print_results):
    report = run_command(JobSpec(**test_data["job"]))
    print_result(test_data, report.lines, print_results)
    assert report.ok
    for line in test_data["lines"]:
        assert line in report.lines
    for key, value in test_data["payload"].items():
        assert report.payload[key] == value
    assert json.loads(report.render(json_output=True)) == report.payload


@pytest.mark.parametrize("test_data", CONFIG["failing_job_tests"])
def test_failing_jobs(test_data):
    with pytest.raises(getattr(errors, test_data["error"])):
        run_command(JobSpec(**test_data["job"]))


def test_job_needs_one_algebra_source():
    with pytest.raises(ValidationError):
        JobSpec(command="ext")
    with pytest.raises(ValidationError):
        JobSpec(command="ext", builtin="exterior2", algebra="a.json")
    with pytest.raises(ValidationError):
        JobSpec(command="verify", algebra="a.json")
    with pytest.raises(ValidationError):
        JobSpec(command="ext", builtin="exterior2", max_deg=-1)


@pytest.fixture
def simple_files(tmp_path):
    alg = builtin("trunc_poly(2)", field=Field.rationals())
    paths = {}
    for side, name in ((Side.RIGHT, "M"), (Side.LEFT, "N")):
        path = tmp_path / f"{name}.json"
        write_json(str(path), module_to_json(simple_module(alg, side)))
        paths[name] = str(path)
    return paths


@pytest.mark.parametrize("command, resolve", [("ext", "first"), ("cotor", "first"), ("cotor", "second")])
def test_derived_functors_of_module_files(command, resolve, simple_files):
    spec = JobSpec(command=command, builtin="trunc_poly", param=2, max_deg=2, resolve=resolve, **simple_files)
    report = run_command(spec)
    assert report.payload == {"functor": command, "dims": [1, 1, 1]}
    assert report.lines[1:] == [f"{command.capitalize()}^{k} = 1" for k in range(3)]


def test_module_side_is_checked(simple_files):
    swapped = {"M": simple_files["N"], "N": simple_files["M"]}
    with pytest.raises(errors.SideMismatchError):
        run_command(JobSpec(command="cotensor", builtin="trunc_poly", param=2, **swapped))


def test_algebra_file_source(tmp_path):
    path = tmp_path / "dual_numbers.json"
    write_json(str(path), algebra_to_json(builtin("trunc_poly(2)", field=Field.prime(3))))
    report = run_command(JobSpec(command="frobenius", algebra=str(path), seed=3))
    assert report.payload["algebra"] == "dual_numbers"
    assert report.payload["field"] == {"Fp": 3}
    assert report.payload["gram_rank"] == 2
    with pytest.raises(FieldMismatchError):
        run_command(JobSpec(command="frobenius", algebra=str(path), field="Q"))


def test_output_is_deterministic():
    spec = JobSpec(command="ext", builtin="exterior2", field="F3", max_deg=1, seed=5, json_output=True)
    first = run_command(spec).render(spec.json_output)
    second = run_command(spec).render(spec.json_output)
    assert first == second
