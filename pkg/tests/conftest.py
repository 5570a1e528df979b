import pytest

from nkdecisions import Landscape

# Tiny hand-built 2-component landscape used across the suite.
# Table rows are keyed own-bit-first, influencer ascending:
#   component 0: 00 -> 0.1, 01 -> 0.2, 10 -> 0.8, 11 -> 0.4
#   component 1: 00 -> 0.5, 01 -> 0.9, 10 -> 0.3, 11 -> 0.6
# Equal-weight fitness: 00 -> 0.3, 01 -> 0.25, 10 -> 0.85, 11 -> 0.5.
F2_TABLES = [[0.1, 0.2, 0.8, 0.4], [0.5, 0.9, 0.3, 0.6]]


@pytest.fixture
def f2() -> Landscape:
    return Landscape(2, 1, F2_TABLES)


_acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    """Collect acceptance verdict lines for the end-of-run summary."""
    _acceptance_lines.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
