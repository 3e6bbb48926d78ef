"""Shared fixtures and the acceptance-criteria terminal summary."""

import pytest

_ACCEPTANCE_LINES = {}


@pytest.fixture
def acceptance_log():
    """Record one pass/fail line per acceptance criterion; the lines are
    replayed uncaptured in the terminal summary."""

    def record(number: int, passed: bool, detail: str) -> None:
        _ACCEPTANCE_LINES[number] = "criterion %d: %s - %s" % (
            number,
            "PASS" if passed else "FAIL",
            detail,
        )

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(_ACCEPTANCE_LINES[number])
