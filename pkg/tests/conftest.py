from __future__ import annotations

import pytest

from ddcg.catalog import default_catalog

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
