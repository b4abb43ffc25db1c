import pytest

from qwhittaker.fillings import Filling
from qwhittaker.patterns import POP, GTPattern

REF_PATTERN_ROWS = ((4,), (7, 2), (8, 5, 2), (10, 6, 4, 0))
REF_OVERLAY = {
    (1, 1): (2, 1, 0),
    (1, 2): (2,),
    (1, 3): (1, 1),
    (2, 2): (0, 0, 0),
    (2, 3): (1,),
    (3, 3): (2, 2),
}
REF_FILLING_ROWS = ((1, 1, 2, 1, 2, 1, 2, 4, 4, 3), (2, 2, 3, 3, 3, 4), (3, 3, 4, 4))
INV_PREIMAGE_ROWS = ((2, 1, 1, 1, 3, 2, 1, 4, 4, 2), (3, 3, 2, 2, 4, 3), (4, 4, 3, 3))
SMALL_FILLING_ROWS = ((2, 1, 1, 2), (4, 3))


@pytest.fixture
def ref_pattern():
    return GTPattern(REF_PATTERN_ROWS)


@pytest.fixture
def ref_pop(ref_pattern):
    return POP.from_parts(ref_pattern, REF_OVERLAY)


@pytest.fixture
def ref_filling():
    return Filling(4, REF_FILLING_ROWS)


@pytest.fixture
def inv_preimage():
    """The filling sent to the reference POP by psi_inv."""
    return Filling(4, INV_PREIMAGE_ROWS)


@pytest.fixture
def small_filling():
    return Filling(4, SMALL_FILLING_ROWS)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::" in nodeid and getattr(report, "when", "call") == "call":
                lines.append((nodeid.split("::", 1)[1], outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")
