"""Fuzzy subsets of monoids and the checks built on them.

Every submonoid check reports the aggregation inequality
``A(sigma(x1), ..., sigma(xn)) <= sigma(x1 o ... o xn)`` and the identity
condition ``sigma(e) = 1`` as separate conditions, named ``inequality`` and
``identity``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .algebra import BoundedLattice, Carrier, Monoid, OperationStructure
from .errors import BudgetExceeded, ConstraintViolation, UndefinedSum
from .numerics import DEFAULT_POLICY, MonotoneFunction, TolerancePolicy, ext_add, pseudo_inverse
from .operators import aggregate
from .report import CheckReport, ConditionResult

DEFAULT_BUDGET = 10_000_000


class FuzzySubset:
    """Membership values of a fuzzy subset on a finite carrier.

    ``fn`` (optional) is the underlying membership function; when present
    it is used for points off the carrier, e.g. products under an operation
    that does not close on a grid.
    """

    def __init__(self, carrier: Carrier, values, fn=None, name: str = "sigma",
                 pol: TolerancePolicy = DEFAULT_POLICY):
        v = np.asarray(values, dtype=float)
        if v.shape != (len(carrier),):
            raise ValueError(f"expected {len(carrier)} membership values, got shape {v.shape}")
        bad = np.flatnonzero((v < -pol.eps_eq) | (v > 1.0 + pol.eps_eq) | np.isnan(v))
        if len(bad):
            i = bad[0]
            raise ConstraintViolation(f"{name}({carrier.values[i]:g}) = {v[i]} is outside [0, 1]",
                                      constraint="membership in [0, 1]")
        self.carrier = carrier
        self.values = np.clip(v, 0.0, 1.0)
        self.fn = fn
        self.name = name
        self.pol = pol

    @classmethod
    def from_function(cls, carrier: Carrier, fn, name="sigma", pol: TolerancePolicy = DEFAULT_POLICY):
        return cls(carrier, [fn(float(x)) for x in carrier.values], fn, name, pol)

    @classmethod
    def from_table(cls, carrier: Carrier, values, name="sigma"):
        return cls(carrier, values, None, name)

    @classmethod
    def constant(cls, carrier: Carrier, c: float = 1.0, name="one"):
        return cls(carrier, np.full(len(carrier), c), lambda x: c, name)

    def __call__(self, x) -> float:
        i = self.carrier.index_of(x, self.pol)
        if i is not None:
            return float(self.values[i])
        if self.fn is None:
            raise ValueError(f"{x!r} is not in the carrier of {self.name} and no membership function is attached")
        return float(min(max(self.fn(float(x)), 0.0), 1.0))

    def at(self, xs) -> np.ndarray:
        """Vectorized evaluation at arbitrary points."""
        xs = np.asarray(xs, dtype=float)
        idx = self.carrier.snap(xs, self.pol)
        out = np.where(idx >= 0, self.values[np.maximum(idx, 0)], np.nan)
        miss = np.argwhere(idx < 0)
        for pos in map(tuple, miss):
            out[pos] = self(xs[pos])
        return out

    def __repr__(self):
        return self.name


@dataclass
class LatticeFuzzySubset:
    """An L-fuzzy set: each carrier point mapped to a lattice element index."""

    carrier: Carrier
    lattice: BoundedLattice
    values: tuple
    name: str = "sigma"

    def __post_init__(self):
        self.values = tuple(self.lattice.index(v) for v in self.values)
        if len(self.values) != len(self.carrier):
            raise ValueError("one lattice value per carrier element is required")
        if any(not 0 <= v < len(self.lattice) for v in self.values):
            raise ConstraintViolation("membership values must be lattice elements",
                                      constraint="values in L")


def _identity_condition(sigma, e, pol, target=1.0):
    s = sigma(e)
    if abs(s - target) <= pol.eps_eq:
        return ConditionResult("identity", True)
    return ConditionResult("identity", False, f"{sigma.name}({e:g})={s:.12g}")


def check_a_fuzzy_submonoid(a, m, sigma: FuzzySubset, arity: int = None, budget: int = DEFAULT_BUDGET,
                            pol: TolerancePolicy = DEFAULT_POLICY) -> CheckReport:
    """Exhaustive check over all ``arity``-tuples of the carrier.

    ``a`` is applied at its declared arity (or ``arity`` if given, by left
    iteration of a binary operator).  ``m`` is a :class:`Monoid` or an
    :class:`OperationStructure` whose products may leave the carrier.
    """
    n = arity or getattr(a, "arity", 2)
    size = len(m.carrier)
    if size ** n > budget:
        raise BudgetExceeded(f"{size}^{n} tuples exceeds the budget of {budget}; use sampled mode")
    idx = list(np.indices((size,) * n).reshape(n, -1))
    vals = m.values
    s = sigma.values if sigma.carrier == m.carrier else sigma.at(vals)
    lhs = np.asarray(aggregate(a, [s[i] for i in idx]), dtype=float)
    if isinstance(m, Monoid):
        rhs = s[reduce(lambda p, i: m.table[p, i], idx)]
    else:
        prod = reduce(lambda p, q: np.asarray(m.op(p, q), dtype=float), [vals[i] for i in idx])
        rhs = sigma.at(prod)
    rep = CheckReport(f"{getattr(a, 'name', a)!s}-fuzzy submonoid check of {sigma.name} on {m.name}",
                      info={"arity": n, "tuples": size ** n})
    bad = np.flatnonzero(lhs > rhs + pol.eps_leq)
    if len(bad):
        k = bad[0]
        rep.add(ConditionResult("inequality", False, tuple(float(vals[i[k]]) for i in idx),
                                lhs=float(lhs[k]), rhs=float(rhs[k])))
    else:
        rep.add(ConditionResult("inequality", True))
    rep.add(_identity_condition(sigma, m.identity, pol))
    return rep


def check_u_fuzzy_submonoid(u, m, sigma, pol: TolerancePolicy = DEFAULT_POLICY) -> CheckReport:
    return check_a_fuzzy_submonoid(u, m, sigma, arity=2, pol=pol)


def check_f_fuzzy_submonoid(f, m, sigma, pol: TolerancePolicy = DEFAULT_POLICY) -> CheckReport:
    """As the A-check, with the bound min(sigma) >= k recorded in ``info``."""
    rep = check_a_fuzzy_submonoid(f, m, sigma, arity=2, pol=pol)
    k = f.k
    lo = float(sigma.values.min())
    rep.info.update(k=k, min_sigma=lo, bound_holds=lo >= k - pol.eps_leq)
    return rep


def core_of(sigma: FuzzySubset, pol: TolerancePolicy = DEFAULT_POLICY) -> set:
    return {x for x, s in zip(sigma.carrier.values, sigma.values) if abs(s - 1.0) <= pol.eps_eq}


def monotone_on_B(sigma: FuzzySubset, e: float, direction: str = "decreasing",
                  pol: TolerancePolicy = DEFAULT_POLICY):
    """Monotonicity of sigma on B = {x : sigma(x) >= e} plus the endpoint
    condition (sigma(1) = 1 when decreasing, sigma(0) = 1 when increasing).

    Returns ``(ok, witness)``; a monotonicity witness is an ordered pair
    ``(x1, x2)`` in B with x1 < x2.
    """
    if direction not in ("decreasing", "increasing"):
        raise ValueError("direction must be 'decreasing' or 'increasing'")
    order = np.argsort(sigma.carrier.array)
    xs, s = sigma.carrier.array[order], sigma.values[order]
    inB = s >= e - pol.eps_leq
    bx, bs = xs[inB], s[inB]
    if direction == "decreasing":
        bad = np.triu(bs[:, None] < bs[None, :] - pol.eps_leq, k=1)
    else:
        bad = np.triu(bs[:, None] > bs[None, :] + pol.eps_leq, k=1)
    hits = np.argwhere(bad)
    if len(hits):
        i, j = hits[0]
        return False, (float(bx[i]), float(bx[j]))
    end = 1.0 if direction == "decreasing" else 0.0
    v = sigma(end)
    if abs(v - 1.0) > pol.eps_eq:
        return False, (f"{sigma.name}({end:g})", v)
    return True, None


def subadditive_on(f_map, samples, pol: TolerancePolicy = DEFAULT_POLICY) -> CheckReport:
    """f(a + b) <= f(a) + f(b) for all sample pairs.

    Pairs whose right-hand side is an undefined extended sum are skipped and
    counted in ``info['skipped']``.
    """
    pts = [float(a) for a in samples]
    fv = [f_map(a) for a in pts]
    rep = CheckReport("subadditivity", info={"samples": len(pts), "skipped": 0})
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            try:
                rhs = ext_add(fv[i], fv[j])
            except UndefinedSum:
                rep.info["skipped"] += 1
                continue
            lhs = f_map(ext_add(a, b))
            if lhs > rhs + pol.eps_leq:
                rep.add(ConditionResult("subadditive", False, (a, b), lhs=lhs, rhs=rhs))
                return rep
    rep.add(ConditionResult("subadditive", True))
    return rep


def sigma_from_generators(h: MonotoneFunction, f_map, t: MonotoneFunction, convention: str = "inverse",
                          carrier: Carrier = None, pol: TolerancePolicy = DEFAULT_POLICY) -> FuzzySubset:
    """sigma = h^[-1] o f o t (``inverse``) or (-h)^[-1] o f o t (``negated``)."""
    if convention == "inverse":
        inv = h
    elif convention == "negated":
        inv = h.negated()
    else:
        raise ValueError("convention must be 'inverse' or 'negated'")

    def sigma(x):
        return pseudo_inverse(inv, f_map(t(x)), pol)

    carrier = carrier or Carrier.grid(101)
    s = FuzzySubset.from_function(carrier, sigma, f"sigma[{convention}]", pol)
    s.convention = convention
    return s


def characterize_subnorm_via_f(u, t_gen: MonotoneFunction, sigma: FuzzySubset, grid=None,
                               pol: TolerancePolicy = DEFAULT_POLICY) -> dict:
    """Compare the direct inequality U(sigma x, sigma y) <= sigma(T(x, y)) with
    subadditivity of f = (-h) o sigma o t^[-1] on the image t(grid).

    ``T(x, y)`` is evaluated as t^[-1](t(x) + t(y)) on both sides, so the two
    verdicts see the same floating-point arguments.
    """
    h = u.h
    g = np.asarray(sigma.carrier.array if grid is None else grid, dtype=float)
    t_img = [t_gen(float(x)) for x in g]

    def T(a, b):
        return pseudo_inverse(t_gen, ext_add(a, b), pol)

    direct = CheckReport(f"direct U-subnorm inequality of {sigma.name}")
    sv = [sigma(float(x)) for x in g]
    found = None
    for i in range(len(g)):
        for j in range(len(g)):
            lhs = u(sv[i], sv[j])
            rhs = sigma(T(t_img[i], t_img[j]))
            if lhs > rhs + pol.eps_leq:
                found = ConditionResult("inequality", False, (g[i], g[j]), lhs=lhs, rhs=rhs)
                break
        if found:
            break
    direct.add(found or ConditionResult("inequality", True))
    direct.add(_identity_condition(sigma, 1.0, pol))

    def f_map(a):
        return -h(sigma(pseudo_inverse(t_gen, a, pol)))

    samples = sorted(set(t_img) | {0.0, t_gen(0.0)})
    sub = subadditive_on(f_map, samples, pol)
    return {
        "direct_verdict": direct["inequality"].passed,
        "subadditivity_verdict": sub.passed,
        "identity_verdict": direct["identity"].passed,
        "f_samples": [(a, f_map(a)) for a in samples],
        "direct_report": direct,
        "subadditivity_report": sub,
    }


def check_lattice_fuzzy_submonoid(lat: BoundedLattice, m: Monoid, sigma: LatticeFuzzySubset,
                                  connective: str = "meet") -> CheckReport:
    """(sigma(x) op sigma(y)) <= sigma(x o y) in the lattice order, and sigma(e) = top."""
    if connective not in ("meet", "join"):
        raise ValueError("connective must be 'meet' or 'join'")
    tab = lat.meet if connective == "meet" else lat.join
    s = np.asarray(sigma.values)
    lhs = tab[s[:, None], s[None, :]]
    rhs = s[m.table]
    ok = lat._order[lhs, rhs]
    rep = CheckReport(f"{connective}-fuzzy submonoid check of {sigma.name} on {m.name}")
    bad = np.argwhere(~ok)
    if len(bad):
        i, j = bad[0]
        v = m.values
        rep.add(ConditionResult("inequality", False, (v[i], v[j]),
                                lhs=lat.labels[lhs[i, j]], rhs=lat.labels[rhs[i, j]]))
    else:
        rep.add(ConditionResult("inequality", True))
    se = s[m.e_index]
    if se == lat.top:
        rep.add(ConditionResult("identity", True))
    else:
        rep.add(ConditionResult("identity", False, f"{sigma.name}({m.identity:g})={lat.labels[se]}"))
    return rep


NONEXISTENCE_FAMILIES = ("identity_sigma_tnorm", "complement_sigma_tconorm")


def nonexistence_probe(family: str, candidates, grid, conn=None,
                       pol: TolerancePolicy = DEFAULT_POLICY) -> CheckReport:
    """Evaluate each candidate uninorm at the pair used in the nonexistence
    arguments and confirm the inequality breaks there.

    ``identity_sigma_tnorm``: sigma(x) = x against a t-norm ``conn``, pair
    (e, y) with y the first grid point above e.  ``complement_sigma_tconorm``:
    sigma(x) = 1 - x against a t-conorm, pair (1 - e, y) with y the last grid
    point below 1 - e.  Each condition passes when the violation is exhibited.
    Any other family is reported as not applicable.
    """
    g = np.asarray(grid, dtype=float)
    rep = CheckReport(f"nonexistence probe {family}", info={"status": "applicable"})
    if family not in NONEXISTENCE_FAMILIES:
        rep.info["status"] = "not applicable"
        return rep
    for u in candidates:
        e = u.e
        if family == "identity_sigma_tnorm":
            sigma = lambda x: x
            x, above = e, g[g > e + pol.eps_eq]
            y = float(above[0]) if len(above) else None
        else:
            sigma = lambda x: 1.0 - x
            x, below = 1.0 - e, g[g < 1.0 - e - pol.eps_eq]
            y = float(below[-1]) if len(below) else None
        if y is None:
            rep.add(ConditionResult(f"violation for {u.name}", False, note="no grid point on the required side"))
            continue
        lhs = u(sigma(x), sigma(y))
        rhs = sigma(conn(x, y))
        shown = lhs > rhs + pol.eps_leq
        rep.add(ConditionResult(f"violation for {u.name}", bool(shown), (x, y), lhs=lhs, rhs=rhs,
                                note="" if shown else "inequality holds at the proof pair"))
        rep.info.setdefault("witnesses", {})[u.name] = ((x, y), lhs, rhs)
    return rep


# Random fuzzy subsets used by the property suites.

def random_piecewise_linear(rng: np.random.Generator, carrier: Carrier, knots=(4, 8), name=None) -> FuzzySubset:
    """Piecewise-linear sigma with a random number of knots in ``knots``,
    values uniform in [0, 1]; the knots include both endpoints."""
    k = int(rng.integers(knots[0], knots[1] + 1))
    xs = np.concatenate(([0.0], np.sort(rng.uniform(0, 1, k - 2)), [1.0]))
    ys = rng.uniform(0, 1, k)
    fn = lambda x: float(np.interp(x, xs, ys))
    return FuzzySubset.from_function(carrier, fn, name or "sigma_pl")


def random_step(rng: np.random.Generator, carrier: Carrier, e: float, anchor: float = 1.0,
                p_anchor_one: float = 0.75, steps=(2, 6), name=None) -> FuzzySubset:
    """Step function on the carrier.  Each step takes the value 1, a value in
    (0, e) or a value in (e, 1) with equal probability; the value at
    ``anchor`` is forced to 1 with probability ``p_anchor_one``."""
    xs = np.asarray(carrier.values)
    k = int(rng.integers(steps[0], steps[1] + 1))
    cuts = np.sort(rng.choice(np.arange(1, len(xs)), size=k - 1, replace=False))
    levels = []
    for _ in range(k):
        c = rng.integers(3)
        levels.append(1.0 if c == 0 else rng.uniform(0, e) if c == 1 else rng.uniform(e, 1))
    vals = np.asarray(levels)[np.searchsorted(cuts, np.arange(len(xs)), side="right")]
    if rng.uniform() < p_anchor_one:
        vals[int(np.argmin(np.abs(xs - anchor)))] = 1.0
    return FuzzySubset.from_table(carrier, vals, name or "sigma_step")
