"""Exhaustive grid checks of the algebraic laws shared by all operator families.

Each check evaluates the operator on the full grid at once and reports the
lexicographically smallest failing tuple (``np.argwhere`` scans in C order).
"""
from __future__ import annotations

import numpy as np

from .numerics import DEFAULT_POLICY, TolerancePolicy
from .report import ConditionResult


def table(op, grid) -> np.ndarray:
    g = np.asarray(grid, dtype=float)
    return np.asarray(op(g[:, None], g[None, :]), dtype=float)


def _first(mask):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(i) for i in hits[0])


def check_commutativity(op, grid, pol: TolerancePolicy = DEFAULT_POLICY, name="commutativity", tab=None):
    g = np.asarray(grid, dtype=float)
    t = table(op, g) if tab is None else tab
    idx = _first(np.abs(t - t.T) > pol.eps_eq)
    if idx is None:
        return ConditionResult(name, True)
    i, j = idx
    return ConditionResult(name, False, (g[i], g[j]), lhs=t[i, j], rhs=t[j, i])


def check_associativity(op, grid, pol: TolerancePolicy = DEFAULT_POLICY, name="associativity", tab=None):
    g = np.asarray(grid, dtype=float)
    t = table(op, g) if tab is None else tab
    left = np.asarray(op(t[:, :, None], g[None, None, :]), dtype=float)
    right = np.asarray(op(g[:, None, None], t[None, :, :]), dtype=float)
    idx = _first(np.abs(left - right) > pol.eps_eq)
    if idx is None:
        return ConditionResult(name, True)
    i, j, k = idx
    return ConditionResult(name, False, (g[i], g[j], g[k]), lhs=left[idx], rhs=right[idx])


def check_monotonicity(op, grid, pol: TolerancePolicy = DEFAULT_POLICY, name="monotonicity", tab=None):
    """Non-decreasing in each argument, over every ordered pair of grid points."""
    g = np.asarray(grid, dtype=float)
    t = table(op, g) if tab is None else tab
    n = len(g)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    # first argument: t[i1, j] <= t[i2, j] for i1 < i2
    bad1 = (t[:, None, :] - t[None, :, :] > pol.eps_leq) & upper[:, :, None]
    idx = _first(bad1)
    if idx is not None:
        i1, i2, j = idx
        return ConditionResult(name, False, (g[i1], g[i2], g[j]), lhs=t[i1, j], rhs=t[i2, j],
                               note="first argument")
    bad2 = (t[:, :, None] - t[:, None, :] > pol.eps_leq) & upper[None, :, :]
    idx = _first(bad2)
    if idx is not None:
        i, j1, j2 = idx
        return ConditionResult(name, False, (g[i], g[j1], g[j2]), lhs=t[i, j1], rhs=t[i, j2],
                               note="second argument")
    return ConditionResult(name, True)


def check_identity(op, grid, e: float, pol: TolerancePolicy = DEFAULT_POLICY, name="identity"):
    g = np.asarray(grid, dtype=float)
    right = np.asarray(op(g, np.full_like(g, e)), dtype=float)
    left = np.asarray(op(np.full_like(g, e), g), dtype=float)
    for vals, order in ((right, "x*e"), (left, "e*x")):
        idx = _first(np.abs(vals - g) > pol.eps_eq)
        if idx is not None:
            (i,) = idx
            w = (g[i], e) if order == "x*e" else (e, g[i])
            return ConditionResult(name, False, w, lhs=vals[i], rhs=g[i])
    return ConditionResult(name, True)


def check_absorbing(op, grid, k: float, pol: TolerancePolicy = DEFAULT_POLICY, name="absorbing"):
    g = np.asarray(grid, dtype=float)
    vals = np.asarray(op(np.full_like(g, k), g), dtype=float)
    idx = _first(np.abs(vals - k) > pol.eps_eq)
    if idx is None:
        return ConditionResult(name, True)
    (i,) = idx
    return ConditionResult(name, False, (k, g[i]), lhs=vals[i], rhs=k)
