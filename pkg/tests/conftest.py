import pytest

from aasemigroup.rodseth import AAParams

WORKED = AAParams(8, 1, 2, 13)


@pytest.fixture
def worked():
    return WORKED


ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_report():
    def report(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  [{detail}]" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
