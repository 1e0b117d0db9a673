import sys
import time
from contextlib import contextmanager
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_RESULTS: list[tuple[str, bool, float]] = []


@contextmanager
def criterion(name: str):
    """Time a block and record it as one acceptance line; exceptions mark it failed."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        ACCEPTANCE_RESULTS.append((name, ok, time.perf_counter() - start))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, secs in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({secs:.2f} s)")
