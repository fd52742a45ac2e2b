from __future__ import annotations

import pytest

from artifact.pipeline import excess_complexes

RESULTS: list = []


@pytest.fixture(scope="session")
def excess28():
    """The four relation-resolved complexes with 3g + 2n = 28."""
    return excess_complexes(3, None)


@pytest.fixture(scope="session")
def record():
    def add(criterion: str, ok: bool, detail: str = "") -> None:
        RESULTS.append((criterion, ok, detail))
    return add


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
