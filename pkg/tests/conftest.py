import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

DEFAULT_SEED = 20240611


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for randomized diagram corpora")


@pytest.fixture(scope="session")
def seed(request):
    return request.config.getoption("--seed")


_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_criteria):
        name = nodeid.split("::test_criterion_", 1)[1]
        number, _, label = name.partition("_")
        verdict = "PASS" if _criteria[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {int(number):>2}: {verdict}  {label.replace('_', ' ')}")
