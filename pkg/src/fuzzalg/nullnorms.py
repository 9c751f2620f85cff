"""Nullnorms F = <S, k, T>: a rescaled t-conorm below the absorbing element k,
a rescaled t-norm above it, and the constant k on the mixed region."""
from __future__ import annotations

import numpy as np

from . import laws
from .connectives import TConorm, TNorm
from .numerics import DEFAULT_POLICY, TolerancePolicy, approx_eq
from .operators import BinaryOperator
from .report import AxiomReport, ConditionResult


class Nullnorm(BinaryOperator):
    def __init__(self, S: TConorm, k: float, T: TNorm, pol: TolerancePolicy = DEFAULT_POLICY):
        if not 0.0 <= k <= 1.0:
            raise ValueError(f"absorbing element must lie in [0, 1], got {k}")
        self.S, self.k, self.T, self.pol = S, float(k), T, pol
        self.vectorized = S.vectorized and T.vectorized
        self.name = f"nullnorm({S.name}, {k:g}, {T.name})"

    @property
    def absorbing(self):
        return self.k

    def _eval(self, x, y):
        k = self.k
        if k == 0.0:
            return np.asarray(self.T(x, y), dtype=float)
        if k == 1.0:
            return np.asarray(self.S(x, y), dtype=float)
        out = np.full(np.shape(x), k, dtype=float)
        lo = (x <= k) & (y <= k)
        hi = (x >= k) & (y >= k) & ~lo
        if lo.any():
            out[lo] = k * np.asarray(self.S(x[lo] / k, y[lo] / k))
        if hi.any():
            w = 1.0 - k
            out[hi] = k + w * np.asarray(self.T((x[hi] - k) / w, (y[hi] - k) / w))
        return out

    def _eval_scalar(self, x, y):
        k = self.k
        if k == 0.0:
            return self.T(x, y)
        if k == 1.0:
            return self.S(x, y)
        if x <= k and y <= k:
            return k * self.S(x / k, y / k)
        if x >= k and y >= k:
            w = 1.0 - k
            return k + w * self.T((x - k) / w, (y - k) / w)
        return k


def nullnorm(S, k, T):
    return Nullnorm(S, k, T)


def nullnorm_eval(f, x: float, y: float) -> float:
    return f(x, y)


def check_nullnorm_axioms(op, k: float, grid, pol: TolerancePolicy = DEFAULT_POLICY) -> AxiomReport:
    """(F1)-(F3), k absorbing, and the boundary identities
    F(0, x) = x for x <= k (F4-i) and F(1, x) = x for x >= k (F4-ii)."""
    g = np.asarray(grid, dtype=float)
    tab = laws.table(op, g)
    rep = AxiomReport(f"nullnorm axioms of {op!r} (k={k:g}, n={len(g)})")
    rep.add(laws.check_commutativity(op, g, pol, name="F1", tab=tab))
    rep.add(laws.check_associativity(op, g, pol, name="F2", tab=tab))
    rep.add(laws.check_monotonicity(op, g, pol, name="F3", tab=tab))
    rep.add(laws.check_absorbing(op, g, k, pol, name="F4"))
    rep.add(_boundary_identity(op, g, 0.0, g <= k + pol.eps_eq, "F4-i", pol))
    rep.add(_boundary_identity(op, g, 1.0, g >= k - pol.eps_eq, "F4-ii", pol))
    return rep


def _boundary_identity(op, g, anchor, mask, name, pol):
    xs = g[mask]
    vals = np.asarray(op(np.full_like(xs, anchor), xs), dtype=float)
    bad = np.flatnonzero(np.abs(vals - xs) > pol.eps_eq)
    if len(bad) == 0:
        return ConditionResult(name, True)
    i = bad[0]
    return ConditionResult(name, False, (anchor, xs[i]), lhs=vals[i], rhs=xs[i])


def absorbing_from_corner(op, pol: TolerancePolicy = DEFAULT_POLICY):
    """k = F(0, 1); returns (k, agrees) where agrees compares with op.k if present."""
    k = op(0.0, 1.0)
    declared = getattr(op, "k", None)
    return k, declared is None or approx_eq(k, declared, pol)
