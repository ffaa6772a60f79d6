import pytest

from app.errors import ComplexTooLargeError, InvalidParameterValueError
from app.warnings import ExcessiveProcessesWarning
from models.files import JobSpec
from models.linalg import Field
from models.reports import Status, VerifyCell
from services.algebras import builtin
from services.cli import CHECKS, DEFAULT_ALGEBRAS, DEFAULT_FIELDS, VerifySuite, inject_fault, run_cell, run_verify
from tests.utils import cases, load_config, print_result

CONFIG = load_config(__file__)


def _cell(algebra, field, checks, inject=False, samples=1, max_deg=1):
    return VerifyCell(algebra, field, tuple(checks), seed=0, samples=samples, max_deg=max_deg, inject_fault=inject)


@pytest.mark.parametrize("test_data", cases(CONFIG["cell_tests"]))
def test_cell(test_data, print_results):
    expected = test_data["expected"]
    result = run_cell(_cell(
        test_data["algebra"], test_data["field"], expected,
        samples=test_data["samples"], max_deg=test_data["max_deg"],
    ))
    statuses = {name: outcome.status.value for name, outcome in result.outcomes.items()}
    print_result(test_data, result.to_json(), print_results)
    assert statuses == expected
    assert not result.failures


@pytest.mark.parametrize("test_data", CONFIG["fault_tests"])
def test_injected_fault(test_data, print_results):
    alg = builtin(test_data["algebra"], field=Field.parse(test_data["field"]))
    corrupted, changed = inject_fault(alg)
    assert changed == tuple(test_data["changed"])
    assert corrupted.find_axiom_violation()[1] == tuple(test_data["location"])

    result = run_cell(_cell(test_data["algebra"], test_data["field"], ["coproduct-axioms", "cotor-ext"], inject=True))
    print_result(test_data, result.to_json(), print_results)
    axioms = result.outcomes["algebra-axioms"]
    assert axioms.status is Status.FAIL
    assert axioms.message.startswith("associativity fails")
    assert axioms.location == tuple(test_data["location"])
    assert result.outcomes["coproduct-axioms"].status is Status.SKIP
    assert result.failures == ["algebra-axioms"]


def test_unknown_check_is_rejected():
    with pytest.raises(InvalidParameterValueError):
        VerifySuite(checks=("no-such-check",))
    with pytest.raises(InvalidParameterValueError):
        VerifySuite(num_processes=0)


def test_suite_grid():
    suite = VerifySuite(algebras=("exterior2", "matrix(2)"), fields=("Q", "F2", "F3"), checks=("delta-injective",))
    assert len(suite.cells) == 6
    assert {cell.field for cell in suite.cells} == {"Q", "F2", "F3"}
    assert tuple(CHECKS)[0] == "coproduct-axioms"


def test_excessive_processes_warning(mocker):
    mocker.patch("os.cpu_count", return_value=1)
    with pytest.warns(ExcessiveProcessesWarning):
        VerifySuite(algebras=("exterior2",), fields=("Q",), num_processes=2)


def test_run_verify_report():
    spec = JobSpec(command="verify", builtin="trunc_poly", param=2, field="F3", only=["cotor-ext", "symmetric-D"], max_deg=1)
    report = run_verify(spec)
    assert report.ok
    assert report.payload["ok"] is True
    assert [cell["algebra"] for cell in report.payload["cells"]] == ["trunc_poly(2)"]
    assert report.lines[-1] == "all checks pass"


def test_run_verify_reports_the_fault():
    spec = JobSpec(command="verify", builtin="exterior2", field="Q", only=["coproduct-axioms"], inject_fault=True)
    report = run_verify(spec)
    assert not report.ok
    assert report.lines[-1] == "1 failing checks"
    assert any("algebra-axioms" in line and "fail" in line for line in report.lines)


def test_oversized_complex_is_skipped(mocker):
    mocker.patch(
        "services.cli.verify.verify_cotor_is_hochschild",
        side_effect=ComplexTooLargeError(20000, 10000, what="bar cochain space C^3"),
    )
    result = run_cell(_cell("trunc_poly(2)", "Q", ["cotor-hochschild", "cotor-ext"]))
    skipped = result.outcomes["cotor-hochschild"]
    assert skipped.status is Status.SKIP
    assert skipped.message == "bar cochain space C^3 of dimension 20000 exceeds the limit of 10000"
    assert result.outcomes["cotor-ext"].status is Status.PASS
    assert not result.failures


@pytest.mark.large
def test_default_grid_passes():
    suite = VerifySuite(samples=5)
    assert len(suite.cells) == len(DEFAULT_ALGEBRAS) * len(DEFAULT_FIELDS) == 32
    assert {"matrix(3)", "group_sym3"} <= set(DEFAULT_ALGEBRAS)
    assert "F5" in DEFAULT_FIELDS
    results = suite.run()
    failures = [(r.algebra, r.field, name, r.outcomes[name].message) for r in results for name in r.failures]
    assert failures == []
    report = run_verify(JobSpec(command="verify", builtin="group_sym3", field="F5"))
    assert report.ok
