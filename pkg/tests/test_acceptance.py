"""Every acceptance criterion at its stated tolerance, one test each.

Each test prints a single ``PASS``/``FAIL`` line; the lines are repeated in
the terminal summary so they appear without ``-s``.
"""
import pytest

from fuzzalg.suite import CRITERIA

ACCEPTANCE_LINES = []


@pytest.mark.parametrize("crit", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(crit):
    r = crit(0)
    line = r.line()
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert r.passed, line
