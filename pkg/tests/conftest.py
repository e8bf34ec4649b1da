"""Shared fixtures and the acceptance-criterion reporter.

Acceptance tests register one verdict per numbered criterion; after the
run a summary section prints one PASS/FAIL line for each so the gate can
be read off the terminal without digging through pytest output.
"""

import pytest

_criteria = {}


def record_criterion(number: int, description: str, passed: bool) -> None:
    _criteria[number] = (description, bool(passed))


@pytest.fixture
def criterion():
    """Record a numbered acceptance verdict, then assert it."""

    def check(number, description, passed):
        record_criterion(number, description, passed)
        assert passed, f"criterion {number} failed: {description}"

    return check


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        description, passed = _criteria[number]
        tag = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{tag}] criterion {number}: {description}")
