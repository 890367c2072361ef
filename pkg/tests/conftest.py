import time
from contextlib import contextmanager

import pytest

_RESULTS: list[tuple[str, str, float]] = []


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion for the end-of-run summary."""

    @contextmanager
    def record(label):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            _RESULTS.append((label, "FAIL", time.perf_counter() - start))
            raise
        _RESULTS.append((label, "PASS", time.perf_counter() - start))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, elapsed in sorted(_RESULTS, key=lambda r: int(r[0].split(".")[0])):
        terminalreporter.write_line(f"{status}  {label}  ({elapsed:.3f}s)")
