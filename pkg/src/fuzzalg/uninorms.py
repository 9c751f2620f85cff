"""Uninorm constructors, evaluation, boundary classification and axiom checks.

Families covered: the min/max structure classes (t-norm block below the
identity, t-conorm block above it, min or max elsewhere), idempotent
uninorms described by a non-increasing function ``g``, representable
uninorms ``h^-1(h(x) + h(y))``, and the two shapes of uninorms continuous
on the open square.
"""
from __future__ import annotations

import math

import numpy as np

from . import laws
from .connectives import S_M, TConorm, TNorm
from .errors import (
    ConstraintViolation,
    InternalInvariantViolation,
    NotLocallyClassifiable,
    UndefinedSum,
)
from .numerics import (
    DEFAULT_POLICY,
    MonotoneFunction,
    TolerancePolicy,
    approx_eq,
    ext_add,
    pseudo_inverse,
    uniform_grid,
)
from .operators import BinaryOperator
from .report import AxiomReport, ConditionResult

LOWER, UPPER, MIXED = "lower_square", "upper_square", "A_of_e"


def region_of(e: float, x: float, y: float) -> str:
    """Which part of the unit square (x, y) falls in, relative to identity e.

    ``[0,e]^2`` is reported as ``lower_square`` (checked first, so (e, e)
    lands there), ``[e,1]^2`` as ``upper_square``, the rest is ``A_of_e``.
    """
    if x <= e and y <= e:
        return LOWER
    if x >= e and y >= e:
        return UPPER
    return MIXED


def _check_identity_value(e):
    if not 0.0 < e < 1.0:
        raise ConstraintViolation(
            f"uninorm identity must lie in (0, 1), got {e}; "
            "use a TNorm (e = 1) or a TConorm (e = 0) instead",
            constraint="e in (0, 1)",
        )


class Uninorm(BinaryOperator):
    e: float

    @property
    def identity(self):
        return self.e


class _StructuredUninorm(Uninorm):
    """t-norm on [0,e]^2, t-conorm on [e,1]^2, ``mixed`` on A(e)."""

    mixed = None  # np.minimum or np.maximum

    def __init__(self, T: TNorm, S: TConorm, e: float):
        _check_identity_value(e)
        self.T, self.S, self.e = T, S, float(e)
        self.vectorized = T.vectorized and S.vectorized
        self.name = f"{self._tag}({T.name}, {S.name}, {e:g})"

    def _eval(self, x, y):
        e = self.e
        out = np.asarray(self.mixed(x, y), dtype=float).copy()
        lo = (x <= e) & (y <= e)
        hi = (x >= e) & (y >= e) & ~lo
        if lo.any():
            out[lo] = e * np.asarray(self.T(x[lo] / e, y[lo] / e))
        if hi.any():
            s = 1.0 - e
            out[hi] = e + s * np.asarray(self.S((x[hi] - e) / s, (y[hi] - e) / s))
        return out

    def _eval_scalar(self, x, y):
        e = self.e
        if x <= e and y <= e:
            return e * self.T(x / e, y / e)
        if x >= e and y >= e:
            s = 1.0 - e
            return e + s * self.S((x - e) / s, (y - e) / s)
        return float(self.mixed(x, y))


class UMin(_StructuredUninorm):
    """Uninorm taking the minimum on A(e); conjunctive (U(0,1) = 0)."""

    _tag = "umin"
    mixed = staticmethod(np.minimum)


class UMax(_StructuredUninorm):
    """Uninorm taking the maximum on A(e); disjunctive (U(0,1) = 1)."""

    _tag = "umax"
    mixed = staticmethod(np.maximum)


def u_min(T, S, e):
    return UMin(T, S, e)


def u_max(T, S, e):
    return UMax(T, S, e)


class IdempotentUninorm(Uninorm):
    """Idempotent uninorm from a non-increasing ``g`` with g(e) = e.

    min below the graph of g, max above it.  On the graph, the side is
    decided by comparing x with g(g(x)); where x = g(g(x)) the ``tie``
    argument picks min or max.  Equalities against g are tested within
    ``eps_eq`` so that x and y = g(x) classify the same way whichever
    argument comes first.
    """

    vectorized = False

    def __init__(self, g, e: float, tie: str = "take_min", pol: TolerancePolicy = DEFAULT_POLICY):
        _check_identity_value(e)
        if tie not in ("take_min", "take_max"):
            raise ValueError("tie must be 'take_min' or 'take_max'")
        self.g, self.e, self.tie, self.pol = g, float(e), tie, pol
        if not approx_eq(g(e), e, pol):
            raise ConstraintViolation(f"g(e) = e violated: g({e}) = {g(e)}", constraint="g(e) = e")
        grid = uniform_grid(101)
        vals = [g(float(x)) for x in grid]
        for a, b in zip(vals, vals[1:]):
            if b > a + pol.eps_leq:
                raise ConstraintViolation("g must be non-increasing", constraint="g non-increasing")
        self.name = f"idem({getattr(g, 'name', 'g')}, {e:g}, {tie})"

    def _eval_scalar(self, x, y):
        eps = self.pol.eps_eq
        gx = self.g(x)
        if y < gx - eps:
            return min(x, y)
        if y > gx + eps:
            return max(x, y)
        ggx = self.g(gx)
        if x < ggx - eps:
            return min(x, y)
        if x > ggx + eps:
            return max(x, y)
        return min(x, y) if self.tie == "take_min" else max(x, y)


class RepresentableUninorm(Uninorm):
    """``U(x, y) = h^-1(h(x) + h(y))`` off the corners (0,1), (1,0).

    ``h`` is strictly increasing with h(0) = -inf, h(e) = 0, h(1) = +inf.
    The corner value is 0 for ``boundary='conjunctive'`` and 1 for
    ``'disjunctive'``; it is decided by the flag, never by inf arithmetic.
    """

    vectorized = False

    def __init__(self, h: MonotoneFunction, e: float, boundary: str = "conjunctive",
                 pol: TolerancePolicy = DEFAULT_POLICY):
        _check_identity_value(e)
        if boundary not in ("conjunctive", "disjunctive"):
            raise ValueError("boundary must be 'conjunctive' or 'disjunctive'")
        if not h.increasing:
            raise ConstraintViolation("h must be strictly increasing", constraint="h increasing")
        if h.endpoint_values[0] != -math.inf:
            raise ConstraintViolation(f"h(0) = -inf violated: got {h(0.0)}", constraint="h(0) = -inf")
        if h.endpoint_values[1] != math.inf:
            raise ConstraintViolation(f"h(1) = +inf violated: got {h(1.0)}", constraint="h(1) = +inf")
        if not approx_eq(h(e), 0.0, pol):
            raise ConstraintViolation(f"h(e) = 0 violated: h({e}) = {h(e)}", constraint="h(e) = 0")
        w = h.monotonicity_witness(uniform_grid(101), pol)
        if w is not None:
            raise ConstraintViolation(f"h is not increasing between {w[0]} and {w[1]}",
                                      constraint="h increasing")
        self.h, self.e, self.boundary, self.pol = h, float(e), boundary, pol
        self.name = f"rep({h.name}, {e:g}, {boundary})"

    def _eval_scalar(self, x, y):
        if (x == 0.0 and y == 1.0) or (x == 1.0 and y == 0.0):
            return 0.0 if self.boundary == "conjunctive" else 1.0
        try:
            s = ext_add(self.h(x), self.h(y))
        except UndefinedSum as exc:
            raise InternalInvariantViolation(
                f"h({x}) + h({y}) is undefined away from the corner; generator is malformed"
            ) from exc
        return pseudo_inverse(self.h, s, self.pol)


def _has_divisors(op, target):
    """True if op(a, b) == target for some interior grid pair."""
    g = uniform_grid(101)[1:-1]
    return bool(np.any(np.asarray(op(g[:, None], g[None, :])) == target))


class CosMinUninorm(Uninorm):
    """Uninorm continuous on (0,1)^2 with a t-norm part on [0, u].

    Blocks: ``lam*T1`` on [0,lam]^2, a rescaled ``T2`` on [lam,u]^2, the
    representable ``R`` rescaled onto [u,1]^2, the value 1 where the larger
    argument is 1 and the smaller exceeds lam, ``corner`` at (lam,1), and
    min elsewhere.  The identity is u + (1-u) * R.e.
    """

    vectorized = False

    def __init__(self, T1: TNorm, lam: float, T2: TNorm, u: float, R: RepresentableUninorm,
                 corner: str = "take_lambda"):
        if corner not in ("take_lambda", "take_one"):
            raise ValueError("corner must be 'take_lambda' or 'take_one'")
        self.T1, self.lam, self.T2, self.u, self.R, self.corner = T1, float(lam), T2, float(u), R, corner
        self.e = self.u + (1.0 - self.u) * R.e
        if not 0.0 <= self.lam <= self.u <= self.e:
            raise ConstraintViolation("need 0 <= lambda <= u <= e", constraint="0 <= lambda <= u <= e")
        _check_identity_value(self.e)
        if corner == "take_lambda" and self.lam < self.u and _has_divisors(T2, 0.0):
            # (1, a, b) with T2-block product lam would break associativity
            raise ConstraintViolation(
                f"corner take_lambda needs T2 without zero divisors; {T2.name} has them, use take_one",
                constraint="corner consistent with T2")
        self.name = f"cosmin({T1.name}, {lam:g}, {T2.name}, {u:g}, {R.name})"

    @classmethod
    def with_identity(cls, T1, lam, T2, u, h, e, corner="take_lambda", boundary="conjunctive",
                      pol: TolerancePolicy = DEFAULT_POLICY):
        """Build from the generator of R and the overall identity e."""
        if not u < e:
            raise ConstraintViolation("need u < e", constraint="0 <= lambda <= u <= e")
        R = RepresentableUninorm(h, (e - u) / (1.0 - u), boundary, pol)
        return cls(T1, lam, T2, u, R, corner)

    def _eval_scalar(self, x, y):
        lam, u = self.lam, self.u
        lo, hi = min(x, y), max(x, y)
        if hi == 1.0:
            if lo > lam:
                return 1.0
            if lo == lam:
                return lam if self.corner == "take_lambda" else 1.0
            return lo
        if hi <= lam:
            return 0.0 if lam == 0.0 else lam * self.T1(x / lam, y / lam)
        if lo >= lam and hi <= u:
            w = u - lam
            return lam if w == 0.0 else lam + w * self.T2((x - lam) / w, (y - lam) / w)
        if lo >= u:
            w = 1.0 - u
            return u + w * self.R((x - u) / w, (y - u) / w)
        return lo


class CosMaxUninorm(Uninorm):
    """Uninorm continuous on (0,1)^2 with a t-conorm part on [v, 1].

    The representable ``R`` is rescaled onto [0,v]^2, so the identity is
    v * R.e; then ``S1`` on [v,omega]^2, ``S2`` on [omega,1]^2, the value 0
    where the smaller argument is 0 and the larger is below omega,
    ``corner`` at (0,omega), and max elsewhere.
    """

    vectorized = False

    def __init__(self, R: RepresentableUninorm, v: float, S1: TConorm, omega: float, S2: TConorm,
                 corner: str = "take_omega"):
        if corner not in ("take_zero", "take_omega"):
            raise ValueError("corner must be 'take_zero' or 'take_omega'")
        self.R, self.v, self.S1, self.omega, self.S2, self.corner = R, float(v), S1, float(omega), S2, corner
        self.e = self.v * R.e
        if not self.e < self.v <= self.omega <= 1.0:
            raise ConstraintViolation("need e < v <= omega <= 1", constraint="e <= v <= omega <= 1")
        _check_identity_value(self.e)
        if corner == "take_omega" and self.v < self.omega and _has_divisors(S1, 1.0):
            raise ConstraintViolation(
                f"corner take_omega needs S1 without one divisors; {S1.name} has them, use take_zero",
                constraint="corner consistent with S1")
        self.name = f"cosmax({R.name}, {v:g}, {S1.name}, {omega:g}, {S2.name})"

    @classmethod
    def with_identity(cls, h, e, v, S1, omega, S2, corner="take_omega", boundary="conjunctive",
                      pol: TolerancePolicy = DEFAULT_POLICY):
        if not e < v:
            raise ConstraintViolation("need e < v", constraint="e <= v <= omega <= 1")
        R = RepresentableUninorm(h, e / v, boundary, pol)
        return cls(R, v, S1, omega, S2, corner)

    def _eval_scalar(self, x, y):
        v, om = self.v, self.omega
        lo, hi = min(x, y), max(x, y)
        if lo == 0.0:
            if hi < om:
                return 0.0
            if hi == om:
                return om if self.corner == "take_omega" else 0.0
            return hi
        if hi <= v:
            return v * self.R(x / v, y / v)
        if lo >= v and hi <= om:
            w = om - v
            return v if w == 0.0 else v + w * self.S1((x - v) / w, (y - v) / w)
        if lo >= om:
            w = 1.0 - om
            return om if w == 0.0 else om + w * self.S2((x - om) / w, (y - om) / w)
        return hi


class LowerBlockMinOperator(BinaryOperator):
    """``e*T(x/e, y/e)`` on [0,e]^2, ``S_M`` rescaled on the half-open
    square (e,1]^2, and min everywhere else.

    This is the operator used to characterize t-subnorms of min through
    monotonicity on the level set {sigma >= e}.  Because the upper block is
    half-open, U(e, y) = e for y > e, so e is *not* a two-sided identity:
    the operator is not a uninorm on the lines through e.
    """

    def __init__(self, T: TNorm, e: float):
        _check_identity_value(e)
        self.T, self.e = T, float(e)
        self.vectorized = T.vectorized
        self.name = f"blockmin({T.name}, {e:g})"

    def _eval(self, x, y):
        e = self.e
        out = np.minimum(x, y).astype(float)
        lo = (x <= e) & (y <= e)
        hi = (x > e) & (y > e)
        if lo.any():
            out[lo] = e * np.asarray(self.T(x[lo] / e, y[lo] / e))
        if hi.any():
            s = 1.0 - e
            out[hi] = e + s * np.asarray(S_M((x[hi] - e) / s, (y[hi] - e) / s))
        return out

    def _eval_scalar(self, x, y):
        e = self.e
        if x <= e and y <= e:
            return e * self.T(x / e, y / e)
        if x > e and y > e:
            return max(x, y)
        return min(x, y)


def uninorm_eval(u, x: float, y: float) -> float:
    return u(x, y)


def classify_boundary(u, pol: TolerancePolicy = DEFAULT_POLICY) -> str:
    """``'conjunctive'`` if U(1,0) = 0, ``'disjunctive'`` if U(1,0) = 1."""
    v = u(1.0, 0.0)
    if approx_eq(v, 0.0, pol):
        return "conjunctive"
    if approx_eq(v, 1.0, pol):
        return "disjunctive"
    raise NotLocallyClassifiable(f"U(1, 0) = {v} is neither 0 nor 1")


def check_uninorm_axioms(op, e: float, grid, pol: TolerancePolicy = DEFAULT_POLICY) -> AxiomReport:
    """Commutativity (U1), associativity (U2), monotonicity (U3), identity e
    (U4) and the min <= U <= max bound on A(e), exhaustively over ``grid``."""
    g = np.asarray(grid, dtype=float)
    tab = laws.table(op, g)
    rep = AxiomReport(f"uninorm axioms of {op!r} (e={e:g}, n={len(g)})")
    rep.add(laws.check_commutativity(op, g, pol, name="U1", tab=tab))
    rep.add(laws.check_associativity(op, g, pol, name="U2", tab=tab))
    rep.add(laws.check_monotonicity(op, g, pol, name="U3", tab=tab))
    rep.add(laws.check_identity(op, g, e, pol, name="U4"))
    rep.add(_check_sandwich(g, e, tab, pol))
    return rep


def _check_sandwich(g, e, tab, pol):
    X, Y = np.meshgrid(g, g, indexing="ij")
    mixed = ((X < e) & (Y > e)) | ((X > e) & (Y < e))
    lo, hi = np.minimum(X, Y), np.maximum(X, Y)
    bad = mixed & ((tab < lo - pol.eps_leq) | (tab > hi + pol.eps_leq))
    hits = np.argwhere(bad)
    if len(hits) == 0:
        return ConditionResult("A(e) bounds", True)
    i, j = hits[0]
    return ConditionResult("A(e) bounds", False, (g[i], g[j]), lhs=tab[i, j],
                           rhs=(lo[i, j], hi[i, j]))


# Generators used in the worked examples: both have identity 1/2.

def piecewise_log_generator() -> MonotoneFunction:
    """h(x) = ln(2x) on [0, 1/2), -ln(2 - 2x) on [1/2, 1]."""

    def h(x):
        return math.log(2.0 * x) if x < 0.5 else -math.log(2.0 - 2.0 * x)

    def h_inv(y):
        return 0.5 * math.exp(y) if y < 0.0 else 1.0 - 0.5 * math.exp(-y)

    return MonotoneFunction(h, increasing=True, inverse=h_inv, name="h_log")


def piecewise_reciprocal_generator() -> MonotoneFunction:
    """h(x) = 1 - 1/(2x) on [0, 1/2], -1/(2(x-1)) - 1 on (1/2, 1]."""

    def h(x):
        return 1.0 - 1.0 / (2.0 * x) if x <= 0.5 else -1.0 / (2.0 * (x - 1.0)) - 1.0

    def h_inv(y):
        return 1.0 / (2.0 * (1.0 - y)) if y <= 0.0 else 1.0 - 1.0 / (2.0 * (y + 1.0))

    return MonotoneFunction(h, increasing=True, inverse=h_inv, name="h_rec")


def representable_log_uninorm(boundary="conjunctive"):
    return RepresentableUninorm(piecewise_log_generator(), 0.5, boundary)


def representable_reciprocal_uninorm(boundary="conjunctive"):
    return RepresentableUninorm(piecewise_reciprocal_generator(), 0.5, boundary)
