_criterion = {}
_results = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark:
            _criterion[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    n = _criterion.get(report.nodeid)
    if n is None:
        return
    ok = _results.get(n, True)
    if report.failed or (report.when == "call" and report.skipped):
        ok = False
    _results[n] = ok


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if _results[n] else 'FAIL'}")
