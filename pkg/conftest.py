import os

import pytest


def pytest_addoption(parser):
    """
    Adds custom command-line options:
    - `--print-results` to control result printing.
    - `--run-large` to include the larger algebras (matrix(3), group_sym3).
    """
    parser.addoption(
        "--print-results", action="store_true", default=False,
        help="Print test results to stdout"
    )
    parser.addoption(
        "--run-large", action="store_true", default=False,
        help="Run the slow cases on larger algebras"
    )


def pytest_configure(config):
    """Tests run with the TEST settings unless FROBLAB_ENV says otherwise."""
    os.environ.setdefault("FROBLAB_ENV", "TEST")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-large"):
        return
    skip_large = pytest.mark.skip(reason="needs --run-large")
    for item in items:
        if "large" in item.keywords:
            item.add_marker(skip_large)


@pytest.fixture
def print_results(request):
    """
    Fixture to check if the `--print-results` flag is set.
    """
    return request.config.getoption("--print-results")


@pytest.fixture
def run_large(request):
    """
    Fixture to check if the `--run-large` flag is set.
    """
    return request.config.getoption("--run-large")
