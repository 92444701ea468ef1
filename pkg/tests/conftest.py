import pytest

_ACCEPTANCE: dict = {}


@pytest.fixture
def criterion(request):
    """Register an acceptance line; the test outcome decides PASS or FAIL."""

    def record(label: str, detail: str = ""):
        _ACCEPTANCE[request.node.nodeid] = {"label": label, "detail": detail, "passed": False}

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    entry = _ACCEPTANCE.get(item.nodeid)
    if entry is not None and rep.when == "call":
        entry["passed"] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _ACCEPTANCE.values():
        status = "PASS" if entry["passed"] else "FAIL"
        detail = f"  ({entry['detail']})" if entry["detail"] else ""
        terminalreporter.write_line(f"{status}  {entry['label']}{detail}")
