import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and not rep.failed):
        return
    num, title = mark.args
    ok, seconds, _ = _RESULTS.get(num, (True, 0.0, title))
    _RESULTS[num] = (ok and rep.passed, seconds + rep.duration, title)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_RESULTS, key=lambda s: int(s)):
        ok, seconds, title = _RESULTS[num]
        tr.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}  ({seconds:.1f} s)")
