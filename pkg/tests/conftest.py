import math

import pytest

from fuzzalg.numerics import MonotoneFunction


@pytest.fixture
def t_luk():
    return MonotoneFunction(lambda x: 1.0 - x, increasing=False, name="t")


@pytest.fixture
def t_luk_bisect():
    """Same generator without an analytic inverse, so pseudo-inverses bisect."""
    return MonotoneFunction(lambda x: 1.0 - x, increasing=False, name="t")


@pytest.fixture
def t_product():
    return MonotoneFunction(lambda x: -math.log(x), increasing=False, inverse=lambda y: math.exp(-y), name="-ln")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
