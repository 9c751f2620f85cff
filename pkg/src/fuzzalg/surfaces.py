"""Operator surfaces sampled on a grid and written as CSV."""
from __future__ import annotations

import csv
import io

from .connectives import S_D, S_L, S_M, S_P, T_D, T_L, T_M, T_P
from .nullnorms import Nullnorm
from .numerics import uniform_grid
from .uninorms import representable_log_uninorm, representable_reciprocal_uninorm, u_min

BUILTIN_SURFACES = {
    "T_M": lambda: T_M, "T_P": lambda: T_P, "T_L": lambda: T_L, "T_D": lambda: T_D,
    "S_M": lambda: S_M, "S_P": lambda: S_P, "S_L": lambda: S_L, "S_D": lambda: S_D,
    "U_p": representable_log_uninorm,
    "U_p2": representable_reciprocal_uninorm,
    "U_L": lambda: u_min(T_L, S_L, 0.5),
    "F_L": lambda: Nullnorm(S_L, 0.5, T_L),
}


def surface_rows(op, n: int) -> list:
    """(x, y, op(x, y)) for the n-point grid, x-major."""
    g = uniform_grid(n)
    return [(float(x), float(y), float(op(float(x), float(y)))) for x in g for y in g]


def surface_csv(op, n: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("x", "y", "value"))
    for row in surface_rows(op, n):
        w.writerow(f"{v:.12g}" for v in row)
    return buf.getvalue()


def read_surface(text: str) -> list:
    """Parse CSV written by :func:`surface_csv` back into float triples."""
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != ["x", "y", "value"]:
        raise ValueError(f"unexpected header {rows[0]}")
    return [tuple(float(v) for v in r) for r in rows[1:]]
