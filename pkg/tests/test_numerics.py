import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzalg.errors import InvalidGrid, MonotonicityViolation, UndefinedSum
from fuzzalg.numerics import (
    DEFAULT_POLICY, MonotoneFunction, TolerancePolicy, ext_add, leq, pseudo_inverse, uniform_grid,
)
from fuzzalg.connectives import (
    lukasiewicz_tconorm_generator, lukasiewicz_tnorm_generator, probsum_tconorm_generator,
    product_tnorm_generator,
)
from fuzzalg.uninorms import piecewise_log_generator, piecewise_reciprocal_generator

SHIPPED = [lukasiewicz_tnorm_generator, product_tnorm_generator, lukasiewicz_tconorm_generator,
           probsum_tconorm_generator, piecewise_log_generator, piecewise_reciprocal_generator]


def one_minus(x):
    return 1.0 - x


@pytest.mark.parametrize("y, expected", [(0.4, 0.6), (0.0, 1.0), (1.7, 0.0)])
def test_pseudo_inverse_of_one_minus_x(y, expected):
    f = MonotoneFunction(one_minus, increasing=False)
    assert pseudo_inverse(f, y) == pytest.approx(expected, abs=1e-12)


def test_increasing_generator_clamps_to_one():
    g = MonotoneFunction(lambda x: x, increasing=True)
    assert pseudo_inverse(g, 3.0) == 1.0
    assert pseudo_inverse(g, 0.25) == pytest.approx(0.25, abs=1e-12)


def test_uninorm_generator_clamps_to_nearest_endpoint():
    h = piecewise_log_generator()
    assert pseudo_inverse(h, -math.inf) == 0.0
    assert pseudo_inverse(h, math.inf) == 1.0


@pytest.mark.parametrize("a, b, expected", [(0.5, 0.5, True), (0.5000000001, 0.5, True), (0.6, 0.5, False)])
def test_leq(a, b, expected):
    assert leq(a, b) is expected


@pytest.mark.parametrize("n, expected", [(2, [0, 1]), (3, [0, 0.5, 1]), (5, [0, 0.25, 0.5, 0.75, 1])])
def test_uniform_grid(n, expected):
    g = uniform_grid(n)
    assert list(g) == expected
    assert g[0] == 0.0 and g[-1] == 1.0


@pytest.mark.parametrize("n", [1, 0, -3])
def test_uniform_grid_rejects_small_n(n):
    with pytest.raises(InvalidGrid):
        uniform_grid(n)


def test_endpoint_values_are_signed_infinities():
    h = piecewise_log_generator()
    assert h.endpoint_values == (-math.inf, math.inf)
    assert h(0.0) == -math.inf and h(1.0) == math.inf


def test_undefined_sum_is_an_error():
    with pytest.raises(UndefinedSum):
        ext_add(-math.inf, math.inf)
    assert ext_add(math.inf, 1.0) == math.inf


@pytest.mark.parametrize("make", SHIPPED)
def test_round_trip_on_grid(make):
    f = make()
    g = uniform_grid(101)
    err = max(abs(pseudo_inverse(f, f(x)) - x) for x in g)
    assert err <= 1e-6


@pytest.mark.parametrize("make", SHIPPED)
def test_bisection_matches_analytic_inverse(make):
    f = make()
    bare = MonotoneFunction(f.fn, increasing=f.increasing, name=f.name)
    g = uniform_grid(101)
    dev = max(abs(pseudo_inverse(bare, f(x)) - pseudo_inverse(f, f(x))) for x in g[1:-1])
    assert dev <= 1e-9


def test_bisection_detects_non_monotone_function():
    wiggle = MonotoneFunction(lambda x: x + 3 * x * (1 - x), increasing=True)
    # f(0) = 0, f(1) = 1 but f(0.5) = 1.25 overshoots the bracket
    with pytest.raises(MonotonicityViolation):
        pseudo_inverse(wiggle, 0.5)


def test_policy_must_be_positive():
    with pytest.raises(ValueError):
        TolerancePolicy(eps_eq=0.0)
    assert DEFAULT_POLICY.bisect_max_iter == 200


EXT = st.sampled_from([-math.inf, -1.0, 0.0, 1.0, math.inf])


def _sum(*xs):
    out = xs[0]
    for x in xs[1:]:
        out = ext_add(out, x)
    return out


@given(EXT, EXT)
def test_extended_addition_commutes(a, b):
    try:
        s = ext_add(a, b)
    except UndefinedSum:
        with pytest.raises(UndefinedSum):
            ext_add(b, a)
        return
    assert ext_add(b, a) == s


@given(EXT, EXT, EXT)
def test_extended_addition_associates(a, b, c):
    try:
        left = _sum(_sum(a, b), c)
        right = _sum(a, _sum(b, c))
    except UndefinedSum:
        return
    assert left == right


@given(st.floats(0.0, 1.0))
def test_round_trip_property_for_log_generator(x):
    h = piecewise_log_generator()
    assert abs(pseudo_inverse(h, h(x)) - x) <= 1e-9


def test_grid_is_numpy_array():
    assert isinstance(uniform_grid(4), np.ndarray)
