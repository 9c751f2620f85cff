"""Extended-real arithmetic, monotone functions and their pseudo-inverses.

Infinities are IEEE ``math.inf`` values used symbolically: they are never
replaced by large finite numbers, and the one undefined sum, (-inf) + (+inf),
raises :class:`~fuzzalg.errors.UndefinedSum` instead of producing ``nan``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import InvalidGrid, MonotonicityViolation, UndefinedSum

INF = math.inf


@dataclass(frozen=True)
class TolerancePolicy:
    """Tolerances shared by every checker; pass one instance explicitly."""

    eps_eq: float = 1e-9
    eps_leq: float = 1e-9
    bisect_tol: float = 1e-12
    bisect_max_iter: int = 200

    def __post_init__(self):
        for name in ("eps_eq", "eps_leq", "bisect_tol", "bisect_max_iter"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")


DEFAULT_POLICY = TolerancePolicy()


def ext_add(a: float, b: float) -> float:
    """Sum of two extended reals; (-inf) + (+inf) raises UndefinedSum."""
    if math.isnan(a) or math.isnan(b):
        raise UndefinedSum(f"not an extended real: {a!r} + {b!r}")
    if math.isinf(a) and math.isinf(b) and (a > 0) != (b > 0):
        raise UndefinedSum("(-inf) + (+inf) is undefined")
    return a + b


def is_defined_sum(a: float, b: float) -> bool:
    return not (math.isinf(a) and math.isinf(b) and (a > 0) != (b > 0))


def leq(a: float, b: float, pol: TolerancePolicy = DEFAULT_POLICY) -> bool:
    return a <= b + pol.eps_leq


def approx_eq(a: float, b: float, pol: TolerancePolicy = DEFAULT_POLICY) -> bool:
    if math.isinf(a) or math.isinf(b):
        return a == b
    return abs(a - b) <= pol.eps_eq


def uniform_grid(n: int) -> np.ndarray:
    """``n`` equally spaced points of [0, 1] with exact endpoints.

    Points are computed as ``i / (n - 1)`` so that every value is the
    correctly rounded fraction (0.5 is exactly on every odd-sized grid).
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
        raise InvalidGrid(f"grid needs an integer n >= 2, got {n!r}")
    return np.arange(n, dtype=float) / (n - 1)


_EVAL_ERRORS = (ZeroDivisionError, ValueError, OverflowError)


@dataclass(frozen=True)
class MonotoneFunction:
    """A strictly monotone map from a subinterval of [0, 1] into [-inf, +inf].

    ``fn`` is evaluated at interior points only. The images of the domain
    endpoints are cached at construction; when ``fn`` fails there (division
    by zero, ``log(0)``) the endpoint value is taken to be the infinite limit
    implied by the direction, e.g. ``+inf`` at the right end of an
    increasing function.
    """

    fn: Callable[[float], float]
    increasing: bool
    domain: tuple = (0.0, 1.0)
    inverse: Optional[Callable[[float], float]] = None
    name: str = "f"
    endpoint_values: tuple = field(init=False, repr=False)

    def __post_init__(self):
        lo, hi = self.domain
        if not 0.0 <= lo < hi <= 1.0:
            raise ValueError(f"domain must be a subinterval of [0, 1], got {self.domain}")
        object.__setattr__(
            self,
            "endpoint_values",
            (self._endpoint(lo, left=True), self._endpoint(hi, left=False)),
        )

    def _endpoint(self, x, left):
        try:
            v = float(self.fn(x))
        except _EVAL_ERRORS:
            v = math.nan
        if math.isnan(v):
            # limit toward the endpoint is -inf at the low side of the image
            low_side = left == self.increasing
            v = -INF if low_side else INF
        return v

    def __call__(self, x: float) -> float:
        lo, hi = self.domain
        if x == lo:
            return self.endpoint_values[0]
        if x == hi:
            return self.endpoint_values[1]
        return float(self.fn(x))

    @property
    def image(self) -> tuple:
        """(smallest, largest) value attained, as extended reals."""
        a, b = self.endpoint_values
        return (a, b) if self.increasing else (b, a)

    def negated(self) -> "MonotoneFunction":
        """The function ``-f`` (opposite direction), keeping a known inverse."""
        inv = self.inverse
        return MonotoneFunction(
            fn=lambda x, f=self.fn: -f(x),
            increasing=not self.increasing,
            domain=self.domain,
            inverse=None if inv is None else (lambda y, g=inv: g(-y)),
            name=f"-{self.name}",
        )

    def monotonicity_witness(self, grid, pol: TolerancePolicy = DEFAULT_POLICY):
        """First consecutive grid pair that breaks the declared direction, or None."""
        vals = [self(float(x)) for x in grid]
        for (x1, v1), (x2, v2) in zip(zip(grid, vals), zip(grid[1:], vals[1:])):
            ok = leq(v1, v2, pol) if self.increasing else leq(v2, v1, pol)
            if not ok:
                return (float(x1), float(x2), v1, v2)
        return None


def pseudo_inverse(fn: MonotoneFunction, y: float, pol: TolerancePolicy = DEFAULT_POLICY) -> float:
    """Pseudo-inverse of a strictly monotone function.

    Inside the image of ``fn`` this is the ordinary inverse; outside it the
    result clamps to the domain endpoint whose image is nearest. For a
    decreasing t-norm generator with ``f(1) = 0`` this gives 0 above
    ``f(0)``; for an increasing t-conorm generator it gives 1 above ``g(1)``.
    """
    if math.isnan(y):
        raise UndefinedSum("pseudo-inverse of an undefined value")
    lo, hi = fn.domain
    f_lo, f_hi = fn.endpoint_values
    if fn.increasing:
        if y <= f_lo:
            return lo
        if y >= f_hi:
            return hi
    else:
        if y >= f_lo:
            return lo
        if y <= f_hi:
            return hi
    if fn.inverse is not None:
        return min(max(float(fn.inverse(y)), lo), hi)
    return _bisect(fn, y, pol)


def _bisect(fn, y, pol):
    a, b = fn.domain
    fa, fb = fn.endpoint_values
    slack = pol.eps_leq
    for _ in range(pol.bisect_max_iter):
        if b - a <= pol.bisect_tol:
            break
        mid = 0.5 * (a + b)
        fm = fn(mid)
        inside = (fa - slack <= fm <= fb + slack) if fn.increasing else (fb - slack <= fm <= fa + slack)
        if not inside:
            raise MonotonicityViolation(
                f"{fn.name} is not monotone on [{a}, {b}]: value {fm} at {mid}"
            )
        if fm == y:
            return mid
        if (fm < y) == fn.increasing:
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    return 0.5 * (a + b)
