import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzalg.connectives import BUILTIN_TCONORMS, BUILTIN_TNORMS, S_L, S_M, T_L, T_M
from fuzzalg.nullnorms import Nullnorm, absorbing_from_corner, check_nullnorm_axioms, nullnorm, nullnorm_eval
from fuzzalg.operators import FunctionOperator
from fuzzalg.numerics import uniform_grid

G21 = uniform_grid(21)


def test_block_values():
    f = nullnorm(S_L, 0.5, T_L)
    assert nullnorm_eval(f, 0.25, 0.25) == pytest.approx(0.5)
    assert nullnorm_eval(f, 0.75, 0.75) == pytest.approx(0.5)


@pytest.mark.parametrize("k", [0.25, 0.5, 0.75])
def test_absorbing_element(k):
    f = Nullnorm(S_L, k, T_L)
    for x in G21:
        assert f(k, float(x)) == pytest.approx(k, abs=1e-12)
    assert f.absorbing == k


@pytest.mark.parametrize("S, T, k", [(S_L, T_L, 0.5), (S_M, T_M, 0.25)])
def test_axioms_pass(S, T, k):
    assert check_nullnorm_axioms(Nullnorm(S, k, T), k, G21).passed


@pytest.mark.parametrize("sname, tname, k", list(itertools.product(BUILTIN_TCONORMS, BUILTIN_TNORMS, [0.25, 0.5, 0.75])))
def test_axioms_pass_for_every_builtin_pair(sname, tname, k):
    f = Nullnorm(BUILTIN_TCONORMS[sname], k, BUILTIN_TNORMS[tname])
    rep = check_nullnorm_axioms(f, k, G21)
    assert rep.passed, rep.summary()
    corner, agrees = absorbing_from_corner(f)
    assert agrees and corner == pytest.approx(k)


def test_constant_map_fails_boundary_identity():
    const = FunctionOperator(lambda x, y: 0.5, "const")
    rep = check_nullnorm_axioms(const, 0.5, G21)
    cond = rep["F4-i"]
    assert not cond.passed and cond.witness == (0.0, 0.0)


def test_degenerate_k():
    assert Nullnorm(S_L, 0.0, T_L)(0.7, 0.6) == pytest.approx(T_L(0.7, 0.6))
    assert Nullnorm(S_L, 1.0, T_L)(0.3, 0.4) == pytest.approx(S_L(0.3, 0.4))


@given(st.floats(0, 1), st.floats(0, 1), st.sampled_from([0.25, 0.5, 0.75]))
def test_boundary_identities(x, y, k):
    f = Nullnorm(S_L, k, T_L)
    if x <= k:
        assert f(0.0, x) == pytest.approx(x, abs=1e-12)
    if x >= k:
        assert f(1.0, x) == pytest.approx(x, abs=1e-12)
    assert f(x, y) == pytest.approx(f(y, x), abs=1e-12)
