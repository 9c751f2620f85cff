"""Fuzzy submonoids under different aggregations, and the worked example.

Run: python3 demos/02_fuzzy_submonoids.py
"""
import math

from fuzzalg import fuzzy_monoids as fm
from fuzzalg.algebra import Carrier, grid_structure
from fuzzalg.connectives import S_L, T_L, T_M
from fuzzalg.fuzzy_monoids import FuzzySubset
from fuzzalg.numerics import MonotoneFunction
from fuzzalg.operators import MinAggregation
from fuzzalg.uninorms import piecewise_log_generator, representable_log_uninorm, u_max

m = grid_structure(T_M, 11, 1.0)
ident = FuzzySubset.from_function(m.carrier, lambda x: x, "x")
comp = FuzzySubset.from_function(m.carrier, lambda x: 1 - x, "1-x")

print("min aggregation on ([0,1], T_M):")
for s in (ident, comp):
    print(fm.check_a_fuzzy_submonoid(MinAggregation(2), m, s).summary())

print("a disjunctive uninorm only admits sigma = 1:")
for s in (ident, FuzzySubset.constant(m.carrier)):
    rep = fm.check_u_fuzzy_submonoid(u_max(T_L, S_L, 0.5), m, s)
    print(rep.summary())

# sigma built from the generators of a representable uninorm and of T_L.
t = MonotoneFunction(lambda x: 1.0 - x, increasing=False, name="t")
u = representable_log_uninorm()
big = grid_structure(T_L, 201, 1.0)
for conv in ("inverse", "negated"):
    s = fm.sigma_from_generators(piecewise_log_generator(), math.sqrt, t, conv, big.carrier)
    rep = fm.check_u_fuzzy_submonoid(u, big, s)
    print(f"{conv:8s} sigma(0)={s(0.0):.6f} sigma(1)={s(1.0):.6f}")
    for c in rep.conditions:
        print("   ", c.describe())

# The subadditivity criterion agrees with the direct check.
r = fm.characterize_subnorm_via_f(u, t, fm.sigma_from_generators(
    piecewise_log_generator(), math.sqrt, t, "negated", Carrier.grid(51)))
print("direct:", r["direct_verdict"], " via subadditivity:", r["subadditivity_verdict"])
