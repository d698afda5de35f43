import time
from contextlib import contextmanager

import pytest

_CRITERIA = []


@pytest.fixture
def criterion():
    """Record a named acceptance criterion with its outcome and runtime."""

    @contextmanager
    def record(label):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            _CRITERIA.append((label, ok, time.perf_counter() - start))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, elapsed in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  ({elapsed:.2f}s)")
