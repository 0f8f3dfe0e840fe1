import pytest

_ACCEPTANCE = []


@pytest.fixture
def acceptance_report(request):
    """Call with (criterion, passed, detail); the line is shown in the terminal summary."""

    def report(criterion, passed, detail):
        status = passed if isinstance(passed, str) else ("PASS" if passed else "FAIL")
        line = f"[{status}] criterion {criterion}: {detail}"
        _ACCEPTANCE.append(line)
        print(line)

    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
