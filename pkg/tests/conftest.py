import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from skabelund import TauTable, make_params  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def params1():
    return make_params(1)


@pytest.fixture(scope="session")
def tt1(params1):
    return TauTable(params1)


@pytest.fixture(scope="session")
def tt2():
    return TauTable(make_params(2))


@pytest.fixture(scope="session", params=[1, 2], ids=["s1", "s2"])
def tt(request, tt1, tt2):
    return tt1 if request.param == 1 else tt2


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
