"""Common base for binary aggregation operators on [0, 1].

Every operator is callable on scalars (returning ``float``) and on numpy
arrays (returning arrays, broadcast elementwise).  Closed-form operators
implement ``_eval`` on arrays directly; generator-built operators implement
``_eval_scalar`` and are vectorized with ``np.vectorize``.
"""
from __future__ import annotations

from functools import reduce

import numpy as np


class BinaryOperator:
    arity = 2
    vectorized = True
    name = "op"

    def __call__(self, x, y):
        xa = np.asarray(x, dtype=float)
        ya = np.asarray(y, dtype=float)
        if self.vectorized:
            xb, yb = np.broadcast_arrays(xa, ya)
            out = np.asarray(self._eval(xb, yb), dtype=float)
        else:
            out = _vectorize(self._eval_scalar)(xa, ya)
        if out.ndim == 0:
            return float(out)
        return out

    def _eval(self, x, y):
        raise NotImplementedError

    def _eval_scalar(self, x, y):
        return float(self._eval(np.asarray(x), np.asarray(y)))

    def __repr__(self):
        return self.name


def _vectorize(f):
    return np.vectorize(lambda a, b: f(float(a), float(b)), otypes=[float])


class FunctionOperator(BinaryOperator):
    """Wrap an arbitrary Python callable ``f(x, y)`` as an operator."""

    def __init__(self, fn, name="op", vectorized=False):
        self.fn = fn
        self.name = name
        self.vectorized = vectorized

    def _eval(self, x, y):
        return self.fn(x, y)

    def _eval_scalar(self, x, y):
        return float(self.fn(x, y))


class MinAggregation:
    """The n-ary minimum, the smallest conjunctive aggregation."""

    name = "min"

    def __init__(self, arity: int = 2):
        if arity < 2:
            raise ValueError("arity must be at least 2")
        self.arity = arity

    def __call__(self, *args):
        out = reduce(np.minimum, [np.asarray(a, dtype=float) for a in args])
        return float(out) if np.ndim(out) == 0 else out

    def __repr__(self):
        return f"min/{self.arity}"


def aggregate(op, arrays):
    """Apply ``op`` to ``len(arrays)`` arguments.

    Operators whose declared arity matches are applied directly; binary
    operators are otherwise left-iterated, which is order independent for
    associative operators.
    """
    if getattr(op, "arity", 2) == len(arrays):
        return op(*arrays)
    if getattr(op, "arity", 2) != 2:
        raise ValueError(f"{op!r} has arity {op.arity}, cannot apply to {len(arrays)} arguments")
    return reduce(op, arrays)
