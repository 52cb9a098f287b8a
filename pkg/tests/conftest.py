import pytest

from pmaxsat.formula import CnfFormula
from pmaxsat.graph import figure_graph


@pytest.fixture
def example():
    """n = 2, m = 4: (x1 v x2 v -x2), (x1), (x1), (x2 v x2)."""
    return CnfFormula(2, [(1, 2, -2), (1,), (1,), (2, 2)])


@pytest.fixture
def figure():
    return figure_graph()


ACCEPTANCE = {}


@pytest.fixture
def criterion():
    """Record one printed pass/fail line per acceptance criterion."""
    def record(number, ok, text):
        ACCEPTANCE[number] = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}"
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
