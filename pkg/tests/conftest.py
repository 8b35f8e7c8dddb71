import math

import pytest

from qubitgauge.core import make_params

OMEGA_PAIRS = [(1.0, 2.0), (0.5, 3.0), (2.0, 1.0)]
THETAS = [k * math.pi / 12 for k in range(7)]  # 0, pi/12, ..., pi/2
CYCLES = [1, 2, 3]

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def ref_params():
    """(omega1, omega2, theta) = (1, 2, pi/6), the worked example throughout."""
    return make_params(1.0, 2.0, math.pi / 6)


@pytest.fixture
def record():
    """Store one acceptance line: record("3 total phase", ok, detail)."""

    def _record(key: str, ok: bool, detail: str) -> bool:
        ACCEPTANCE_RESULTS[key] = (bool(ok), detail)
        print(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
        return bool(ok)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (int(k.split()[0]), k)):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
