"""Connectives from generators, and the uninorm families side by side.

Run: python3 demos/01_connectives.py
"""
import numpy as np

from fuzzalg.connectives import S_L, T_L, T_M, TNorm
from fuzzalg.numerics import MonotoneFunction, uniform_grid
from fuzzalg.nullnorms import Nullnorm
from fuzzalg.uninorms import representable_log_uninorm, u_max, u_min

# Lukasiewicz t-norm rebuilt from its additive generator t(x) = 1 - x.
t = MonotoneFunction(lambda x: 1.0 - x, increasing=False, inverse=lambda y: 1.0 - y, name="t")
T_gen = TNorm.from_generator(t)
g = uniform_grid(11)
err = max(abs(T_gen(x, y) - T_L(x, y)) for x in g for y in g)
print(f"max |T_gen - T_L| on an 11-point grid: {err:.2e}")

ops = {
    "U_min(T_L, S_L, 0.5)": u_min(T_L, S_L, 0.5),
    "U_max(T_L, S_L, 0.5)": u_max(T_L, S_L, 0.5),
    "representable (log)": representable_log_uninorm(),
    "nullnorm <S_L, 0.5, T_M>": Nullnorm(S_L, 0.5, T_M),
}
pts = [(0.2, 0.3), (0.2, 0.8), (0.5, 0.7), (0.7, 0.9)]
print(f"{'operator':28s}" + "".join(f"  U{p}" for p in pts))
for name, op in ops.items():
    print(f"{name:28s}" + "".join(f"  {op(*p):10.4f}" for p in pts))

# Identity and absorbing behaviour at a glance.
u = ops["representable (log)"]
print("U(0.5, y) == y on the grid:", np.allclose([u(0.5, y) for y in g], g))
print("U(0, 1) =", u(0.0, 1.0), "(conjunctive corner)")
