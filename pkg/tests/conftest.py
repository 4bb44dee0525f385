import pytest

from bohrlab.testfn import bounded_test_series

CRITERIA = []


@pytest.fixture
def record():
    """Collect one pass/fail line per acceptance criterion."""

    def _record(name, passed, detail=""):
        CRITERIA.append((name, bool(passed), detail))
        return passed

    return _record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in CRITERIA:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")


@pytest.fixture(scope="session")
def blaschke_pullbacks():
    return list(bounded_test_series(seed=7, count=120, gammas=(0.0, 0.25, 0.5, 0.75)))
