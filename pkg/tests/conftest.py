import pytest

_verdicts: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion.

    Call ``criterion(label, ok, detail)`` once at the end of the test; the line
    is printed immediately and repeated in the terminal summary.
    """

    def record(label: str, ok: bool, detail: str = ""):
        line = (label, bool(ok), detail)
        _verdicts.append(line)
        print(f"\n{'PASS' if ok else 'FAIL'} {label} {detail}".rstrip())
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _verdicts:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
