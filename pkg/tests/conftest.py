import pytest

_criteria = {}


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run long-running extensions")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion exercised by the test")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="long-running; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    key = (mark.args[0], mark.args[1])
    state = _criteria.setdefault(key, "PASS")
    if rep.skipped and rep.when in ("setup", "call"):
        if state == "PASS":
            _criteria[key] = "SKIP"
    elif rep.failed:
        _criteria[key] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, text), state in sorted(_criteria.items(), key=lambda kv: str(kv[0][0])):
        terminalreporter.write_line(f"criterion {number}: {state}  {text}")
