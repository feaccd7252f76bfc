import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).resolve().parent))

settings.register_profile("suite", max_examples=25, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")

@pytest.fixture(scope="session")
def herds():
    from helpers import F5, Q
    from herdkit import comatrix_herd, herd_from_coobject, quadratic_coobject, trivial_herd
    return {
        "trivial": trivial_herd(Q),
        "comatrix": comatrix_herd(F5),
        "quadratic_q": herd_from_coobject(quadratic_coobject(Q, 2)),
        "quadratic_f5": herd_from_coobject(quadratic_coobject(F5, 2)),
    }


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {text}")
