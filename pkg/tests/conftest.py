import pytest

from corpus import all_graphs

ACCEPTANCE_LOG: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def graphs():
    return all_graphs()


@pytest.fixture
def criterion():
    """Record a pass/fail line for the acceptance summary."""

    def record(label: str, failures: int, detail: str = ""):
        ok = failures == 0
        ACCEPTANCE_LOG.append((label, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'} {label} {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in ACCEPTANCE_LOG:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
