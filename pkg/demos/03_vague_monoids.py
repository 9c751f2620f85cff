"""From a crisp monoid to a vague one and back.

Run: python3 demos/03_vague_monoids.py
"""
import numpy as np

from fuzzalg import vague as vg
from fuzzalg.algebra import capped_add_monoid
from fuzzalg.operators import MinAggregation

a = MinAggregation(2)
m = capped_add_monoid(3)
E = vg.graded_for(m, 0.2, 0.7)
print("E =\n", np.round(E.matrix, 3))
print(vg.check_indistinguishability(a, E).summary(), "| separates:", E.separates())
print(vg.check_regular(E, m).summary())

V = vg.vague_from_monoid(E, m)
print(vg.check_vague_binary(a, E, V).summary())
print(vg.check_vague_monoid(a, E, V).summary())

A = vg.associated_monoid(V, E)
print("associated monoid equals the original:", np.array_equal(A.table, m.table))

# The identity map is a homomorphism; its kernel is E(., e).
ident = vg.CarrierMap.identity(m.carrier)
print(vg.check_homomorphism(ident, (V, E), (V, E)).summary())
print("kernel:", vg.kernel(ident, E, 0).values)

# Collapsing to {0, 1} is not: V(1, 1, 2) = 1 but the images 1, 1, 1 only reach E(2, 1).
f = vg.CarrierMap.from_function(m.carrier, m.carrier, lambda x: min(x, 1), "sgn")
print(vg.check_homomorphism(f, (V, E), (V, E)).summary())
