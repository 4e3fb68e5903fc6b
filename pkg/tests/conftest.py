from __future__ import annotations

import contextlib
import time

import pytest

_RESULTS = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion as PASS/FAIL for the terminal summary."""
    log = request.config.stash.setdefault(_RESULTS, [])

    @contextlib.contextmanager
    def run(number: int, title: str):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            log.append((number, title, False, time.perf_counter() - start))
            raise
        log.append((number, title, True, time.perf_counter() - start))

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, secs in sorted(results):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({secs:.1f}s)")
