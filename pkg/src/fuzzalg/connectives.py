"""t-norms and t-conorms: the four classical families of each and
generator-built (continuous Archimedean) instances."""
from __future__ import annotations

import math

import numpy as np

from .errors import ConstraintViolation, NotContinuous
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

TNORM_NAMES = ("min", "product", "lukasiewicz", "drastic")
TCONORM_NAMES = ("max", "probsum", "lukasiewicz", "drastic")


def _check_generator(fn, pol, *, increasing, anchor, anchor_label):
    if fn.increasing != increasing:
        direction = "increasing" if increasing else "decreasing"
        raise ConstraintViolation(f"generator {fn.name} must be strictly {direction}",
                                  constraint=direction)
    w = fn.monotonicity_witness(uniform_grid(101), pol)
    if w is not None:
        raise ConstraintViolation(f"generator {fn.name} is not monotone between {w[0]} and {w[1]}",
                                  constraint="monotone")
    if not approx_eq(fn(anchor), 0.0, pol):
        raise ConstraintViolation(f"{anchor_label} violated: got {fn(anchor)}",
                                  constraint=anchor_label)


class TNorm(BinaryOperator):
    """A t-norm: one of ``min``, ``product``, ``lukasiewicz``, ``drastic``,
    or ``T(x, y) = f^[-1](f(x) + f(y))`` for a decreasing generator with f(1) = 0."""

    identity = 1.0

    def __init__(self, variant: str, generator: MonotoneFunction = None,
                 pol: TolerancePolicy = DEFAULT_POLICY):
        if variant == "generator":
            if generator is None:
                raise ValueError("generator variant needs a generator")
            _check_generator(generator, pol, increasing=False, anchor=1.0, anchor_label="f(1) = 0")
            self.vectorized = False
        elif variant not in TNORM_NAMES:
            raise ValueError(f"unknown t-norm {variant!r}; expected one of {TNORM_NAMES}")
        self.variant = variant
        self.generator = generator
        self.pol = pol
        self.name = f"T[{generator.name}]" if generator is not None else _TNORM_LABEL[variant]

    @classmethod
    def from_generator(cls, f: MonotoneFunction, pol: TolerancePolicy = DEFAULT_POLICY):
        return cls("generator", f, pol)

    @property
    def continuous(self):
        return self.variant != "drastic"

    def _eval(self, x, y):
        v = self.variant
        if v == "min":
            return np.minimum(x, y)
        if v == "product":
            return x * y
        if v == "lukasiewicz":
            # x - (1 - y) keeps T(x, 1) == x exactly
            return np.maximum(x - (1.0 - y), 0.0)
        if v == "drastic":
            return np.where((x == 1.0) | (y == 1.0), np.minimum(x, y), 0.0)
        raise AssertionError(v)

    def _eval_scalar(self, x, y):
        f = self.generator
        return pseudo_inverse(f, ext_add(f(x), f(y)), self.pol)


class TConorm(BinaryOperator):
    """A t-conorm: ``max``, ``probsum``, ``lukasiewicz``, ``drastic``, or
    ``S(x, y) = g^[-1](g(x) + g(y))`` for an increasing generator with g(0) = 0."""

    identity = 0.0

    def __init__(self, variant: str, generator: MonotoneFunction = None,
                 pol: TolerancePolicy = DEFAULT_POLICY):
        if variant == "generator":
            if generator is None:
                raise ValueError("generator variant needs a generator")
            _check_generator(generator, pol, increasing=True, anchor=0.0, anchor_label="g(0) = 0")
            self.vectorized = False
        elif variant not in TCONORM_NAMES:
            raise ValueError(f"unknown t-conorm {variant!r}; expected one of {TCONORM_NAMES}")
        self.variant = variant
        self.generator = generator
        self.pol = pol
        self.name = f"S[{generator.name}]" if generator is not None else _TCONORM_LABEL[variant]

    @classmethod
    def from_generator(cls, g: MonotoneFunction, pol: TolerancePolicy = DEFAULT_POLICY):
        return cls("generator", g, pol)

    @property
    def continuous(self):
        return self.variant != "drastic"

    def _eval(self, x, y):
        v = self.variant
        if v == "max":
            return np.maximum(x, y)
        if v == "probsum":
            return x + y - x * y
        if v == "lukasiewicz":
            return np.minimum(x + y, 1.0)
        if v == "drastic":
            return np.where((x == 0.0) | (y == 0.0), np.maximum(x, y), 1.0)
        raise AssertionError(v)

    def _eval_scalar(self, x, y):
        g = self.generator
        return pseudo_inverse(g, ext_add(g(x), g(y)), self.pol)


_TNORM_LABEL = {"min": "T_M", "product": "T_P", "lukasiewicz": "T_L", "drastic": "T_D"}
_TCONORM_LABEL = {"max": "S_M", "probsum": "S_P", "lukasiewicz": "S_L", "drastic": "S_D"}

T_M = TNorm("min")
T_P = TNorm("product")
T_L = TNorm("lukasiewicz")
T_D = TNorm("drastic")
S_M = TConorm("max")
S_P = TConorm("probsum")
S_L = TConorm("lukasiewicz")
S_D = TConorm("drastic")

BUILTIN_TNORMS = {"min": T_M, "product": T_P, "lukasiewicz": T_L, "drastic": T_D}
BUILTIN_TCONORMS = {"max": S_M, "probsum": S_P, "lukasiewicz": S_L, "drastic": S_D}


def tnorm_eval(t: TNorm, x: float, y: float) -> float:
    return t(x, y)


def tconorm_eval(s: TConorm, x: float, y: float) -> float:
    return s(x, y)


def idempotents(op, grid, pol: TolerancePolicy = DEFAULT_POLICY) -> set:
    """Grid points x with op(x, x) = x."""
    g = np.asarray(grid, dtype=float)
    diag = np.asarray(op(g, g), dtype=float)
    return {float(x) for x, v in zip(g, diag) if abs(v - x) <= pol.eps_eq}


def is_archimedean_on_grid(op, grid, pol: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """Idempotent-set test, valid only for continuous operators."""
    if not getattr(op, "continuous", True):
        raise NotContinuous(f"{op!r} is not continuous; the idempotent criterion does not apply")
    return idempotents(op, grid, pol) == {0.0, 1.0}


# A few standard generators, each with its analytic inverse.

def lukasiewicz_tnorm_generator() -> MonotoneFunction:
    return MonotoneFunction(lambda x: 1.0 - x, increasing=False, inverse=lambda y: 1.0 - y, name="1-x")


def product_tnorm_generator() -> MonotoneFunction:
    return MonotoneFunction(lambda x: -math.log(x), increasing=False,
                            inverse=lambda y: math.exp(-y), name="-ln(x)")


def lukasiewicz_tconorm_generator() -> MonotoneFunction:
    return MonotoneFunction(lambda x: x, increasing=True, inverse=lambda y: y, name="x")


def probsum_tconorm_generator() -> MonotoneFunction:
    return MonotoneFunction(lambda x: -math.log1p(-x), increasing=True,
                            inverse=lambda y: -math.expm1(-y), name="-ln(1-x)")
