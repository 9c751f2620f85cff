import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzalg import fuzzy_monoids as fm
from fuzzalg.algebra import BoundedLattice, Carrier, corpus_monoids, grid_structure, is_submonoid, max_monoid
from fuzzalg.connectives import S_L, S_M, T_L, T_M, T_P
from fuzzalg.errors import BudgetExceeded, ConstraintViolation
from fuzzalg.fuzzy_monoids import FuzzySubset, LatticeFuzzySubset
from fuzzalg.nullnorms import Nullnorm
from fuzzalg.numerics import MonotoneFunction
from fuzzalg.operators import MinAggregation
from fuzzalg.uninorms import (
    LowerBlockMinOperator, piecewise_log_generator, piecewise_reciprocal_generator, representable_log_uninorm,
    u_max, u_min,
)

MIN = MinAggregation(2)
TM11 = grid_structure(T_M, 11, 1.0)
SM11 = grid_structure(S_M, 11, 0.0)


def fs(m, fn, name="sigma"):
    return FuzzySubset.from_function(m.carrier, fn, name)


def example_sigma(x):
    return x if x < 0.5 else 1.0


def t_luk():
    return MonotoneFunction(lambda x: 1.0 - x, increasing=False, name="t")


# A-fuzzy submonoids

def test_identity_sigma_is_min_submonoid_of_tm():
    assert fm.check_a_fuzzy_submonoid(MIN, TM11, fs(TM11, lambda x: x)).passed


def test_complement_sigma_is_min_submonoid_of_sm():
    assert fm.check_a_fuzzy_submonoid(MIN, SM11, fs(SM11, lambda x: 1 - x)).passed


def test_complement_sigma_fails_identity_on_tm():
    rep = fm.check_a_fuzzy_submonoid(MIN, TM11, fs(TM11, lambda x: 1 - x))
    assert rep["inequality"].passed
    assert not rep["identity"].passed and rep["identity"].witness == "sigma(1)=0"


def test_higher_arity_runs_and_budget_guards():
    rep = fm.check_a_fuzzy_submonoid(MinAggregation(3), TM11, fs(TM11, lambda x: x))
    assert rep.passed and rep.info["tuples"] == 11 ** 3
    with pytest.raises(BudgetExceeded):
        fm.check_a_fuzzy_submonoid(MinAggregation(4), grid_structure(T_M, 101, 1.0), fs(TM11, lambda x: x), budget=1e6)


def test_membership_range_is_validated():
    with pytest.raises(ConstraintViolation):
        FuzzySubset(TM11.carrier, [1.5] * 11)


# U- and F-fuzzy submonoids

def test_lower_block_min_example_passes():
    m = grid_structure(T_M, 21, 1.0)
    rep = fm.check_u_fuzzy_submonoid(LowerBlockMinOperator(T_L, 0.5), m, fs(m, example_sigma))
    assert rep.passed


def test_disjunctive_accepts_constant_one():
    for m in (TM11, SM11, max_monoid(3)):
        assert fm.check_u_fuzzy_submonoid(u_max(T_L, S_L, 0.5), m, FuzzySubset.constant(m.carrier)).passed


def test_disjunctive_rejects_identity_sigma():
    rep = fm.check_u_fuzzy_submonoid(u_max(T_L, S_L, 0.5), TM11, fs(TM11, lambda x: x))
    c = rep["inequality"]
    assert not c.passed
    x, y = c.witness
    assert c.lhs > c.rhs and x in TM11.carrier.values and y in TM11.carrier.values


def test_f_submonoid_constant_one_passes():
    rep = fm.check_f_fuzzy_submonoid(Nullnorm(S_L, 0.25, T_M), TM11, FuzzySubset.constant(TM11.carrier))
    assert rep.passed and rep.info["bound_holds"]


def test_f_submonoid_identity_sigma_fails_below_k():
    rep = fm.check_f_fuzzy_submonoid(Nullnorm(S_L, 0.5, T_L), TM11, fs(TM11, lambda x: x))
    assert not rep["inequality"].passed
    assert rep["inequality"].rhs < 0.5
    assert not rep.info["bound_holds"]


# cores, monotonicity on B, subadditivity

def test_core_of():
    g5 = Carrier.grid(5)
    assert fm.core_of(FuzzySubset.constant(g5)) == set(g5.values)
    assert fm.core_of(FuzzySubset.from_function(g5, lambda x: x)) == {1.0}
    assert fm.core_of(FuzzySubset.from_function(g5, example_sigma)) == {0.5, 0.75, 1.0}


def test_monotone_on_b_examples():
    g = Carrier.grid(21)
    assert fm.monotone_on_B(FuzzySubset.from_function(g, example_sigma), 0.5, "decreasing") == (True, None)
    ok, w = fm.monotone_on_B(FuzzySubset.from_function(g, lambda x: x), 0.5, "decreasing")
    assert not ok and w[0] < w[1]
    for d in ("decreasing", "increasing"):
        assert fm.monotone_on_B(FuzzySubset.constant(g), 0.3, d)[0]


def test_subadditive_examples():
    assert fm.subadditive_on(math.sqrt, [0, 0.5, 1, 2, 4]).passed
    rep = fm.subadditive_on(lambda a: a * a, [1, 1])
    assert not rep.passed and rep.failed[0].witness == (1.0, 1.0)
    assert rep.failed[0].lhs == 4 and rep.failed[0].rhs == 2
    assert fm.subadditive_on(lambda a: 3 * a, [0, 0.25, 1, 7]).passed


def test_subadditive_counts_undefined_sums():
    rep = fm.subadditive_on(lambda a: -math.inf if a == 0 else math.inf, [0.0, 1.0])
    assert rep.info["skipped"] == 2


# sigma from generators and the characterization

def test_sigma_from_generators_values():
    s = fm.sigma_from_generators(piecewise_log_generator(), math.sqrt, t_luk())
    assert s(1.0) == pytest.approx(0.5)
    assert s(0.0) == pytest.approx(1 - math.exp(-1) / 2, abs=1e-12)
    assert s.convention == "inverse"
    s2 = fm.sigma_from_generators(piecewise_reciprocal_generator(), math.sqrt, t_luk())
    assert s2(1.0) == pytest.approx(0.5)


def test_worked_example_verdicts_agree_under_both_conventions():
    u = representable_log_uninorm()
    for conv, expected in (("inverse", False), ("negated", True)):
        s = fm.sigma_from_generators(piecewise_log_generator(), math.sqrt, t_luk(), conv, Carrier.grid(51))
        r = fm.characterize_subnorm_via_f(u, t_luk(), s)
        assert r["direct_verdict"] == r["subadditivity_verdict"] == expected
        assert not r["identity_verdict"]


def test_worked_example_inverse_witness():
    u = representable_log_uninorm()
    s = fm.sigma_from_generators(piecewise_log_generator(), math.sqrt, t_luk(), "inverse", Carrier.grid(201))
    rep = fm.check_u_fuzzy_submonoid(u, grid_structure(T_L, 201, 1.0), s)
    c = rep["inequality"]
    assert c.witness == (0.0, 0.0)
    assert c.lhs == pytest.approx(0.932332358382, abs=1e-11)
    assert c.rhs == pytest.approx(1 - math.exp(-1) / 2, abs=1e-11)


def test_constant_one_passes_characterization():
    r = fm.characterize_subnorm_via_f(representable_log_uninorm(), t_luk(), FuzzySubset.constant(Carrier.grid(21)))
    assert r["direct_verdict"]


def test_characterization_agrees_on_random_sigma():
    rng = np.random.default_rng(11)
    u = representable_log_uninorm()
    for _ in range(10):
        s = fm.random_piecewise_linear(rng, Carrier.grid(31))
        r = fm.characterize_subnorm_via_f(u, t_luk(), s)
        assert r["direct_verdict"] == r["subadditivity_verdict"]


# lattice-valued

def test_lattice_submonoids():
    lat = BoundedLattice.chain(4)
    m = max_monoid(3)
    top = LatticeFuzzySubset(m.carrier, lat, ("3",) * 4)
    assert fm.check_lattice_fuzzy_submonoid(lat, m, top).passed
    dec = LatticeFuzzySubset(m.carrier, lat, ("3", "2", "2", "0"))
    assert fm.check_lattice_fuzzy_submonoid(lat, m, dec).passed
    bad = LatticeFuzzySubset(m.carrier, lat, ("2", "2", "1", "0"))
    rep = fm.check_lattice_fuzzy_submonoid(lat, m, bad)
    assert rep["inequality"].passed and not rep["identity"].passed


def test_lattice_join_connective():
    lat = BoundedLattice.boolean(2)
    m = max_monoid(1)
    s = LatticeFuzzySubset(m.carrier, lat, ("{0,1}", "{0}"))
    assert fm.check_lattice_fuzzy_submonoid(lat, m, s, "meet").passed
    assert not fm.check_lattice_fuzzy_submonoid(lat, m, s, "join").passed


# nonexistence

def test_nonexistence_probes_find_violations():
    g = np.linspace(0, 1, 101)
    cands = [u_min(T_L, S_L, 0.5), representable_log_uninorm(), fm_idem()]
    assert fm.nonexistence_probe("identity_sigma_tnorm", cands, g, T_L).passed
    assert fm.nonexistence_probe("complement_sigma_tconorm", cands, g, S_L).passed
    assert fm.nonexistence_probe("constant_one", cands, g, T_L).info["status"] == "not applicable"


def fm_idem():
    from fuzzalg.uninorms import IdempotentUninorm
    return IdempotentUninorm(lambda x: 1.0 - x, 0.5)


# properties

def _close_under(m, values):
    """Smallest pointwise raise of ``values`` that is a min-submonoid of m."""
    v = np.array(values, dtype=float)
    v[m.e_index] = 1.0
    while True:
        lhs = np.minimum(v[:, None], v[None, :])
        new = v.copy()
        np.maximum.at(new, m.table.ravel(), lhs.ravel())
        if np.array_equal(new, v):
            return v
        v = new


MONOIDS = corpus_monoids(6)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(range(len(MONOIDS))), st.lists(st.floats(0, 1), min_size=6, max_size=6))
def test_core_is_submonoid(mi, raw):
    m = MONOIDS[mi]
    vals = _close_under(m, raw[:len(m)])
    s = FuzzySubset(m.carrier, vals)
    assert fm.check_a_fuzzy_submonoid(MIN, m, s).passed
    assert is_submonoid(m, fm.core_of(s))[0]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(0, 1), min_size=11, max_size=11))
def test_min_aggregation_triviality(vals):
    s_tm = FuzzySubset(TM11.carrier, vals)
    assert fm.check_a_fuzzy_submonoid(MIN, TM11, s_tm).passed == (abs(vals[-1] - 1) <= 1e-9)
    s_sm = FuzzySubset(SM11.carrier, vals)
    assert fm.check_a_fuzzy_submonoid(MIN, SM11, s_sm).passed == (abs(vals[0] - 1) <= 1e-9)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from([0.0, 0.3, 0.999999, 1.0]), min_size=11, max_size=11))
def test_disjunctive_rigidity(vals):
    s = FuzzySubset(TM11.carrier, vals)
    verdict = fm.check_u_fuzzy_submonoid(u_max(T_L, S_L, 0.5), TM11, s).passed
    assert verdict == (max(1 - v for v in vals) <= 1e-9)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(0, 1), min_size=11, max_size=11), st.sampled_from([0.3, 0.5, 0.7]))
def test_f_bound_and_fm_characterization(vals, k):
    s = FuzzySubset(TM11.carrier, vals)
    rep = fm.check_f_fuzzy_submonoid(Nullnorm(S_L, k, T_L), grid_structure(T_L, 11, 1.0), s)
    if rep.passed:
        assert min(vals) >= k - 1e-9
    verdict = fm.check_f_fuzzy_submonoid(Nullnorm(S_L, k, T_M), TM11, s).passed
    assert verdict == (abs(vals[-1] - 1) <= 1e-9 and min(vals) >= k - 1e-9)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.sampled_from([0.25, 0.5, 0.75]))
def test_monotone_on_b_equivalence(seed, e):
    rng = np.random.default_rng(seed)
    m = grid_structure(T_M, 41, 1.0)
    s = fm.random_step(rng, m.carrier, e)
    verdict = fm.check_u_fuzzy_submonoid(LowerBlockMinOperator(T_L, e), m, s).passed
    assert verdict == fm.monotone_on_B(s, e, "decreasing")[0]
