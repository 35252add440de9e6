"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

import pytest

_results: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None and (report.when == "call" or report.failed):
        n, title = mark.args
        failed = report.failed or _results.get(n, ("PASS",))[0] == "FAIL"
        _results[n] = ("FAIL" if failed else "PASS", title)
    return report


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status, title = _results[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")
