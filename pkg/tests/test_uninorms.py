import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzalg.connectives import S_L, S_M, S_P, T_L, T_M, T_P
from fuzzalg.errors import ConstraintViolation, NotLocallyClassifiable
from fuzzalg.numerics import MonotoneFunction, uniform_grid
from fuzzalg.operators import FunctionOperator
from fuzzalg.uninorms import (
    CosMaxUninorm, CosMinUninorm, IdempotentUninorm, LowerBlockMinOperator, RepresentableUninorm,
    check_uninorm_axioms, classify_boundary, piecewise_log_generator, piecewise_reciprocal_generator,
    region_of, representable_log_uninorm, representable_reciprocal_uninorm, u_max, u_min, uninorm_eval,
)

h_log = piecewise_log_generator()
inner = st.floats(0.001, 0.999)


def shipped():
    return [
        representable_log_uninorm(), representable_reciprocal_uninorm(),
        representable_log_uninorm("disjunctive"),
        u_min(T_L, S_L, 0.5), u_max(T_L, S_L, 0.5), u_min(T_P, S_P, 0.25), u_max(T_M, S_P, 0.75),
        IdempotentUninorm(lambda x: 1.0 - x, 0.5), IdempotentUninorm(lambda x: 1.0 - x, 0.5, "take_max"),
        CosMinUninorm.with_identity(T_L, 0.2, T_P, 0.4, h_log, 0.7),
        CosMaxUninorm.with_identity(h_log, 0.3, 0.6, S_P, 0.8, S_L),
    ]


@pytest.mark.parametrize("u", shipped(), ids=lambda u: u.name)
def test_axioms_hold_exhaustively(u):
    rep = check_uninorm_axioms(u, u.e, uniform_grid(21))
    assert rep.passed, rep.summary()


@pytest.mark.parametrize("u", shipped(), ids=lambda u: u.name)
def test_identity_is_exact_on_grid(u):
    for x in uniform_grid(21):
        assert uninorm_eval(u, float(x), u.e) == pytest.approx(x, abs=1e-9)


def test_worked_representable_values():
    u = representable_log_uninorm()
    assert u(0.25, 0.25) == pytest.approx(0.125, abs=1e-12)
    assert u(0.75, 0.75) == pytest.approx(0.875, abs=1e-12)


def test_u_min_on_a_of_e():
    assert u_min(T_L, S_L, 0.5)(0.2, 0.8) == pytest.approx(0.2)
    assert u_max(T_L, S_L, 0.5)(0.2, 0.8) == pytest.approx(0.8)


@pytest.mark.parametrize("u, expected", [
    (u_min(T_L, S_L, 0.5), "conjunctive"),
    (u_max(T_L, S_L, 0.5), "disjunctive"),
    (representable_log_uninorm("disjunctive"), "disjunctive"),
    (representable_reciprocal_uninorm(), "conjunctive"),
])
def test_classify_boundary(u, expected):
    assert classify_boundary(u) == expected


def test_classify_boundary_rejects_middle_corner():
    avg = FunctionOperator(lambda x, y: 0.5 * (x + y), "mean")
    with pytest.raises(NotLocallyClassifiable):
        classify_boundary(avg)


@pytest.mark.parametrize("x, y, region", [
    (0.2, 0.3, "lower_square"), (0.2, 0.8, "A_of_e"), (0.5, 0.8, "upper_square"),
    (0.8, 0.2, "A_of_e"), (0.5, 0.5, "lower_square"),
])
def test_region_of(x, y, region):
    assert region_of(0.5, x, y) == region


def test_projection_fails_commutativity():
    proj = FunctionOperator(lambda x, y: x, "proj")
    rep = check_uninorm_axioms(proj, 0.5, uniform_grid(21))
    w = rep["U1"].witness
    assert not rep["U1"].passed
    assert proj(*w) != proj(w[1], w[0])


@pytest.mark.parametrize("e", [0.0, 1.0])
def test_degenerate_identity_rejected(e):
    with pytest.raises(ConstraintViolation, match="TNorm|TConorm"):
        u_min(T_L, S_L, e)


def test_generator_must_vanish_at_identity():
    shifted = MonotoneFunction(lambda x: math.log(x / (1 - x)) + 1.0, increasing=True)
    with pytest.raises(ConstraintViolation) as info:
        RepresentableUninorm(shifted, 0.5)
    assert info.value.constraint == "h(e) = 0"


def test_generator_must_reach_infinities():
    bounded = MonotoneFunction(lambda x: x - 0.5, increasing=True)
    with pytest.raises(ConstraintViolation):
        RepresentableUninorm(bounded, 0.5)


def test_idempotent_requires_fixed_point():
    with pytest.raises(ConstraintViolation, match="g\\(e\\) = e"):
        IdempotentUninorm(lambda x: 1.0 - x, 0.3)


def test_idempotent_requires_non_increasing_g():
    with pytest.raises(ConstraintViolation):
        IdempotentUninorm(lambda x: x, 0.5)


def test_cos_corner_conflict_rejected():
    with pytest.raises(ConstraintViolation):
        CosMaxUninorm.with_identity(h_log, 0.3, 0.6, S_L, 0.8, S_L)
    with pytest.raises(ConstraintViolation):
        CosMinUninorm.with_identity(T_L, 0.2, T_L, 0.4, h_log, 0.7)


def test_cos_identities_follow_rescaling():
    cmin = CosMinUninorm.with_identity(T_L, 0.2, T_P, 0.4, h_log, 0.7)
    cmax = CosMaxUninorm.with_identity(h_log, 0.3, 0.6, S_P, 0.8, S_L)
    assert cmin.e == pytest.approx(0.7) and cmax.e == pytest.approx(0.3)


def test_lower_block_min_is_not_a_uninorm():
    op = LowerBlockMinOperator(T_L, 0.5)
    assert op(0.5, 0.8) == 0.5
    assert not check_uninorm_axioms(op, 0.5, uniform_grid(21))["U4"].passed


@given(inner, inner)
def test_representable_round_trip(x, y):
    u = representable_log_uninorm()
    h = u.h
    assert h(u(x, y)) == pytest.approx(h(x) + h(y), abs=1e-6)


@given(st.floats(0, 1), st.floats(0, 1))
def test_sandwich_on_a_of_e(x, y):
    for u in (u_min(T_L, S_L, 0.5), u_max(T_L, S_L, 0.5), representable_log_uninorm(),
              IdempotentUninorm(lambda t: 1.0 - t, 0.5)):
        if region_of(u.e, x, y) == "A_of_e":
            v = u(x, y)
            assert min(x, y) - 1e-9 <= v <= max(x, y) + 1e-9


@given(st.floats(0, 1))
def test_idempotent_uninorm_is_idempotent(x):
    u = IdempotentUninorm(lambda t: 1.0 - t, 0.5)
    assert u(x, x) == x


@given(st.floats(0, 1), st.floats(0, 1))
def test_vectorized_matches_scalar(x, y):
    for u in (u_min(T_L, S_L, 0.5), CosMinUninorm.with_identity(T_L, 0.2, T_P, 0.4, h_log, 0.7)):
        arr = u(np.array([x]), np.array([y]))[0]
        assert arr == pytest.approx(u._eval_scalar(x, y), abs=1e-12)


def test_reciprocal_generator_identity():
    u = representable_reciprocal_uninorm()
    g = uniform_grid(101)
    assert max(abs(u(0.5, float(y)) - y) for y in g) <= 1e-9
