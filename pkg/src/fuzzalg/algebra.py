"""Finite carriers, monoids stored as Cayley tables, submonoid tests, the
discrete carriers L_{n,m}, and bounded lattices given by tables."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ClosureError, ConstraintViolation
from .numerics import DEFAULT_POLICY, TolerancePolicy, uniform_grid
from .report import AxiomReport, ConditionResult


@dataclass(frozen=True)
class Carrier:
    """Finite evaluation domain: labelled numeric points, sorted or not.

    ``kind`` is ``"grid"`` for uniform grids on [0, 1] and ``"finite"``
    otherwise; the distinction only affects how results are displayed.
    """

    values: tuple
    labels: tuple = None
    kind: str = "finite"

    def __post_init__(self):
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(_label(v) for v in self.values))
        if len(self.labels) != len(self.values):
            raise ValueError("labels and values differ in length")
        if len(set(self.values)) != len(self.values):
            raise ValueError("carrier values must be distinct")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("carrier labels must be distinct")

    @classmethod
    def grid(cls, n: int) -> "Carrier":
        return cls(tuple(float(v) for v in uniform_grid(n)), kind="grid")

    @classmethod
    def finite(cls, values, labels=None) -> "Carrier":
        return cls(tuple(float(v) for v in values), None if labels is None else tuple(labels))

    def __len__(self):
        return len(self.values)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def index_of(self, value, pol: TolerancePolicy = DEFAULT_POLICY):
        """Index of the carrier point within eps_eq of ``value`` (or a label match)."""
        if isinstance(value, str):
            return self.labels.index(value) if value in self.labels else None
        d = np.abs(self.array - float(value))
        i = int(np.argmin(d))
        return i if d[i] <= pol.eps_eq else None

    def snap(self, values, pol: TolerancePolicy = DEFAULT_POLICY):
        """Map an array of values to carrier indices; -1 where none matches."""
        v = np.asarray(values, dtype=float)
        arr = self.array
        order = np.argsort(arr)
        srt = arr[order]
        pos = np.clip(np.searchsorted(srt, v), 1, len(srt) - 1) if len(srt) > 1 else np.zeros(v.shape, int)
        left, right = srt[pos - 1], srt[pos]
        pick = np.where(np.abs(v - left) <= np.abs(v - right), pos - 1, pos)
        idx = order[pick]
        ok = np.abs(arr[idx] - v) <= pol.eps_eq
        return np.where(ok, idx, -1)


def _label(v):
    return str(int(v)) if float(v).is_integer() else f"{v:g}"


class Monoid:
    """A finite monoid ``(M, o, e)`` stored as an index table.

    ``table[i, j]`` is the index of ``M[i] o M[j]``.  Construction re-runs
    :func:`check_monoid` unless ``validate=False`` (used for building
    counterexamples).
    """

    def __init__(self, carrier: Carrier, table, identity, name: str = "M", validate: bool = True,
                 pol: TolerancePolicy = DEFAULT_POLICY):
        self.carrier = carrier
        self.table = np.asarray(table, dtype=int)
        n = len(carrier)
        if self.table.shape != (n, n):
            raise ValueError(f"table shape {self.table.shape} does not match carrier size {n}")
        if self.table.min() < 0 or self.table.max() >= n:
            raise ClosureError("table entries must index carrier elements")
        e = carrier.index_of(identity, pol)
        if e is None:
            raise ValueError(f"identity {identity!r} is not a carrier element")
        self.e_index = e
        self.name = name
        self.pol = pol
        if validate:
            rep = check_monoid(self, pol)
            if not rep.passed:
                raise ConstraintViolation(f"{name} is not a monoid: {rep.failed[0].describe()}",
                                          constraint=rep.failed[0].name)

    @classmethod
    def from_table(cls, values, table, identity, labels=None, name="M", validate=True,
                   pol: TolerancePolicy = DEFAULT_POLICY):
        """``table`` holds product *values* (or labels), row x, column y."""
        carrier = Carrier.finite(values, labels)
        idx = np.empty((len(carrier), len(carrier)), dtype=int)
        for i, row in enumerate(table):
            for j, v in enumerate(row):
                k = carrier.index_of(v, pol)
                if k is None:
                    raise ClosureError(f"{carrier.labels[i]} o {carrier.labels[j]} = {v!r} is outside the carrier",
                                       pair=(carrier.values[i], carrier.values[j]))
                idx[i, j] = k
        return cls(carrier, idx, identity, name, validate, pol)

    @classmethod
    def from_operation(cls, op, carrier: Carrier, identity, name=None, validate=True,
                       pol: TolerancePolicy = DEFAULT_POLICY):
        """Tabulate ``op`` on ``carrier``; any product off the carrier is a ClosureError."""
        a = carrier.array
        vals = np.asarray(op(a[:, None], a[None, :]), dtype=float)
        idx = carrier.snap(vals, pol)
        bad = np.argwhere(idx < 0)
        if len(bad):
            i, j = bad[0]
            raise ClosureError(f"{op!r}({a[i]:g}, {a[j]:g}) = {vals[i, j]:.12g} is not a carrier point",
                               pair=(float(a[i]), float(a[j])))
        return cls(carrier, idx, identity, name or f"({op!r})", validate, pol)

    @classmethod
    def grid(cls, op, n: int, identity, validate=True, pol: TolerancePolicy = DEFAULT_POLICY):
        return cls.from_operation(op, Carrier.grid(n), identity, f"grid({n}) with {op!r}", validate, pol)

    def __len__(self):
        return len(self.carrier)

    @property
    def values(self) -> np.ndarray:
        return self.carrier.array

    @property
    def identity(self) -> float:
        return self.carrier.values[self.e_index]

    @property
    def value_table(self) -> np.ndarray:
        return self.values[self.table]

    def op(self, x, y):
        """Product of two carrier values (or labels)."""
        i, j = self.carrier.index_of(x, self.pol), self.carrier.index_of(y, self.pol)
        if i is None or j is None:
            raise ValueError(f"({x!r}, {y!r}) not in carrier")
        return self.carrier.values[self.table[i, j]]

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __repr__(self):
        return self.name


class OperationStructure:
    """A carrier with an operation that need not close on it.

    Used for ``([0, 1], T)`` sampled on a grid when T leaves the grid (T_P):
    fuzzy-subset checks then evaluate membership at the exact product.
    """

    def __init__(self, op, carrier: Carrier, identity: float, name: str = None):
        self.op, self.carrier, self.identity = op, carrier, float(identity)
        self.name = name or f"{carrier.kind}({len(carrier)}) with {op!r}"

    @classmethod
    def grid(cls, op, n: int, identity):
        return cls(op, Carrier.grid(n), identity, f"grid({n}) with {op!r}")

    @property
    def values(self) -> np.ndarray:
        return self.carrier.array

    def __len__(self):
        return len(self.carrier)

    def __repr__(self):
        return self.name


def grid_structure(op, n: int, identity, pol: TolerancePolicy = DEFAULT_POLICY):
    """A :class:`Monoid` when ``op`` closes on grid(n), else an OperationStructure."""
    try:
        return Monoid.grid(op, n, identity, pol=pol)
    except ClosureError:
        return OperationStructure.grid(op, n, identity)


def check_monoid(m: Monoid, pol: TolerancePolicy = DEFAULT_POLICY) -> AxiomReport:
    """Associativity over all triples and two-sided identity, exactly on indices."""
    t, e, v = m.table, m.e_index, m.values
    rep = AxiomReport(f"monoid axioms of {m.name}")
    left = t[t[:, :, None], np.arange(len(v))[None, None, :]]   # (x o y) o z
    right = t[np.arange(len(v))[:, None, None], t[None, :, :]]  # x o (y o z)
    hits = np.argwhere(left != right)
    if len(hits):
        i, j, k = hits[0]
        rep.add(ConditionResult("associativity", False, (v[i], v[j], v[k]),
                                lhs=v[left[i, j, k]], rhs=v[right[i, j, k]]))
    else:
        rep.add(ConditionResult("associativity", True))
    n = np.arange(len(v))
    bad = np.flatnonzero((t[e, :] != n) | (t[:, e] != n))
    if len(bad):
        i = bad[0]
        rep.add(ConditionResult("identity", False, (v[e], v[i]), lhs=v[t[e, i]], rhs=v[t[i, e]],
                                note=f"e o x and x o e should both equal {v[i]:g}"))
    else:
        rep.add(ConditionResult("identity", True))
    return rep


def discrete_carrier(anchor: float, n: int, m: int) -> Carrier:
    """L_{n,m}: n equal steps from 0 up to the anchor, then m steps to 1."""
    if not 0.0 < anchor < 1.0:
        raise ValueError("anchor must lie in (0, 1)")
    if n < 1 or m < 1:
        raise ValueError("n and m must be at least 1")
    lower = [i * anchor / n for i in range(n)] + [anchor]
    upper = [anchor + j * (1.0 - anchor) / m for j in range(1, m)] + [1.0]
    return Carrier(tuple(float(x) for x in lower + upper), kind="finite")


def is_submonoid(m_or_op, subset, identity=None, pol: TolerancePolicy = DEFAULT_POLICY):
    """Closure of ``subset`` under the operation, plus membership of the identity.

    ``m_or_op`` is a :class:`Monoid` or any binary operator; for a bare
    operator the identity is taken from ``identity`` or the operator's own
    ``identity`` attribute, and skipped when neither exists (nullnorms).
    Returns ``(ok, witness)`` where a closure witness is ``(x, y, x o y)``.
    """
    sub = np.asarray(sorted(float(s) for s in subset), dtype=float)
    if isinstance(m_or_op, Monoid):
        op = lambda a, b: m_or_op.value_table[m_or_op.carrier.snap(a, pol)[:, None],
                                              m_or_op.carrier.snap(b, pol)[None, :]]
        prod = op(sub, sub)
        e = m_or_op.identity if identity is None else identity
    else:
        prod = np.asarray(m_or_op(sub[:, None], sub[None, :]), dtype=float)
        e = identity if identity is not None else getattr(m_or_op, "identity", None)
    if e is not None and not np.any(np.abs(sub - e) <= pol.eps_eq):
        return False, ("identity", e)
    member = np.any(np.abs(prod[:, :, None] - sub[None, None, :]) <= pol.eps_eq, axis=2)
    bad = np.argwhere(~member)
    if len(bad):
        i, j = bad[0]
        return False, (float(sub[i]), float(sub[j]), float(prod[i, j]))
    return True, None


def is_discrete_operator(op, subset, pol: TolerancePolicy = DEFAULT_POLICY):
    """Finite sub-structure containing 0 and 1 (discrete uninorm / nullnorm)."""
    vals = [float(s) for s in subset]
    for end in (0.0, 1.0):
        if not any(abs(v - end) <= pol.eps_eq for v in vals):
            return False, ("missing", end)
    return is_submonoid(op, vals, pol=pol)


# Corpus of small finite monoids.  ``family`` lets callers pick matching
# graded relations without parsing names.

def _tag(m: Monoid, family: str) -> Monoid:
    m.family = family
    return m

def max_monoid(n: int) -> Monoid:
    """({0..n}, max, 0)."""
    vals = list(range(n + 1))
    return _tag(Monoid.from_table(vals, [[max(a, b) for b in vals] for a in vals], 0, name=f"max{{0..{n}}}"), "max")


def min_monoid(n: int) -> Monoid:
    """({0..n}, min, n)."""
    vals = list(range(n + 1))
    return _tag(Monoid.from_table(vals, [[min(a, b) for b in vals] for a in vals], n, name=f"min{{0..{n}}}"), "min")


def capped_add_monoid(n: int) -> Monoid:
    """({0..n}, min(a + b, n), 0): addition truncated at n."""
    vals = list(range(n + 1))
    return _tag(Monoid.from_table(vals, [[min(a + b, n) for b in vals] for a in vals], 0,
                                  name=f"capadd{{0..{n}}}"), "capadd")


def left_zero_monoid(k: int) -> Monoid:
    """Left-zero semigroup on k elements with an identity adjoined (value 0).

    Non-commutative for k >= 2: a_i o a_j = a_i.
    """
    vals = list(range(k + 1))
    labels = ["e"] + [f"a{i}" for i in range(1, k + 1)]
    table = [[b if a == 0 else a for b in vals] for a in vals]
    return _tag(Monoid.from_table(vals, table, 0, labels=labels, name=f"leftzero{k}+e"), "leftzero")


def corpus_monoids(max_size: int = 6) -> list:
    out = []
    for n in range(1, max_size):
        out += [max_monoid(n), min_monoid(n), capped_add_monoid(n)]
    out += [left_zero_monoid(k) for k in range(2, max_size)]
    return [m for m in out if len(m) <= max_size]


@dataclass
class BoundedLattice:
    """A finite lattice given by meet and join tables over element indices."""

    labels: tuple
    meet: np.ndarray
    join: np.ndarray
    name: str = "L"
    _order: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.meet = np.asarray(self.meet, dtype=int)
        self.join = np.asarray(self.join, dtype=int)
        self.labels = tuple(self.labels)
        n = len(self.labels)
        self._order = self.meet == np.arange(n)[:, None]  # i <= j iff i ^ j = i
        rep = check_lattice(self)
        if not rep.passed:
            raise ConstraintViolation(f"not a bounded lattice: {rep.failed[0].describe()}",
                                      constraint=rep.failed[0].name)

    @classmethod
    def chain(cls, n: int) -> "BoundedLattice":
        """The n-element chain 0 < 1 < ... < n-1."""
        r = np.arange(n)
        return cls(tuple(str(i) for i in r), np.minimum.outer(r, r), np.maximum.outer(r, r), f"chain{n}")

    @classmethod
    def boolean(cls, atoms: int) -> "BoundedLattice":
        """Subsets of ``atoms`` points, encoded as bitmasks."""
        r = np.arange(2 ** atoms)
        labels = tuple("{" + ",".join(str(b) for b in range(atoms) if s >> b & 1) + "}" for s in r)
        return cls(labels, np.bitwise_and.outer(r, r), np.bitwise_or.outer(r, r), f"boolean{atoms}")

    def __len__(self):
        return len(self.labels)

    def index(self, label) -> int:
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            return int(label)
        return self.labels.index(str(label))

    def leq(self, a, b) -> bool:
        return bool(self._order[self.index(a), self.index(b)])

    @property
    def top(self) -> int:
        return int(np.flatnonzero(self._order.all(axis=0))[0])

    @property
    def bottom(self) -> int:
        return int(np.flatnonzero(self._order.all(axis=1))[0])


def check_lattice(lat: BoundedLattice) -> AxiomReport:
    rep = AxiomReport(f"lattice laws of {lat.name}")
    n = len(lat.labels)
    r = np.arange(n)
    for opname, t, dual in (("meet", lat.meet, lat.join), ("join", lat.join, lat.meet)):
        def fail(cond, w):
            rep.add(ConditionResult(f"{opname} {cond}", False, tuple(lat.labels[i] for i in w)))
        bad = np.argwhere(t != t.T)
        fail("commutativity", bad[0]) if len(bad) else rep.add(ConditionResult(f"{opname} commutativity", True))
        bad = np.argwhere(t[t[:, :, None], r[None, None, :]] != t[r[:, None, None], t[None, :, :]])
        fail("associativity", bad[0]) if len(bad) else rep.add(ConditionResult(f"{opname} associativity", True))
        bad = np.argwhere(t[r[:, None], dual] != r[:, None])  # x op (x dual y) = x
        fail("absorption", bad[0]) if len(bad) else rep.add(ConditionResult(f"{opname} absorption", True))
        bad = np.flatnonzero(t[r, r] != r)
        fail("idempotence", bad[:1]) if len(bad) else rep.add(ConditionResult(f"{opname} idempotence", True))
    tops = [i for i in r if np.all(lat.meet[i, :] == r)]
    bots = [i for i in r if np.all(lat.join[i, :] == r)]
    rep.add(ConditionResult("top is meet identity", bool(tops)))
    rep.add(ConditionResult("bottom is join identity", bool(bots)))
    return rep


def lattice_from_tables(labels, meet_rows, join_rows, name="L") -> BoundedLattice:
    """Build from tables whose entries are labels."""
    labels = tuple(str(l) for l in labels)
    to_i = {l: i for i, l in enumerate(labels)}
    meet = [[to_i[str(v)] for v in row] for row in meet_rows]
    join = [[to_i[str(v)] for v in row] for row in join_rows]
    return BoundedLattice(labels, meet, join, name)
