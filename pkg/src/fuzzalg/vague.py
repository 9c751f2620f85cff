"""Indistinguishability operators, vague binary operations and vague monoids
on finite carriers, parameterized by a binary aggregation operator ``a``.

Relations are numpy tables indexed by carrier position: ``E[x, y]`` and
``V[x, y, z]`` (the degree to which z is x o y).  The four-argument
aggregation in the vague conditions is a left-iterated application of ``a``
unless ``a`` itself declares arity 4.
"""
from __future__ import annotations

import numpy as np

from .algebra import Carrier, Monoid
from .errors import MissingProduct, RegularityRequired, SeparationViolated
from .fuzzy_monoids import FuzzySubset
from .numerics import DEFAULT_POLICY, TolerancePolicy
from .operators import aggregate
from .report import CheckReport, ConditionResult

EXHAUSTIVE_MAX = 8
DEFAULT_SAMPLES = 200_000


class IndistinguishabilityOp:
    """A fuzzy relation E on a finite carrier.

    Only the range is validated here; reflexivity, symmetry and
    transitivity are properties of a particular aggregation and are
    reported by :func:`check_indistinguishability`.
    """

    def __init__(self, carrier: Carrier, matrix, name: str = "E"):
        m = np.asarray(matrix, dtype=float)
        n = len(carrier)
        if m.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} table, got {m.shape}")
        if np.any((m < 0) | (m > 1)) or np.isnan(m).any():
            raise ValueError("indistinguishability values must lie in [0, 1]")
        self.carrier, self.matrix, self.name = carrier, m, name

    @classmethod
    def crisp(cls, carrier: Carrier, name="crisp"):
        return cls(carrier, np.eye(len(carrier)), name)

    @classmethod
    def total(cls, carrier: Carrier, name="total"):
        return cls(carrier, np.ones((len(carrier), len(carrier))), name)

    @classmethod
    def from_function(cls, carrier: Carrier, fn, name="E"):
        v = carrier.values
        return cls(carrier, [[1.0 if i == j else fn(v[i], v[j]) for j in range(len(v))]
                             for i in range(len(v))], name)

    def __call__(self, x, y) -> float:
        return float(self.matrix[self.carrier.index_of(x), self.carrier.index_of(y)])

    def separates(self, pol: TolerancePolicy = DEFAULT_POLICY) -> bool:
        off = ~np.eye(len(self.carrier), dtype=bool)
        return not bool(np.any(self.matrix[off] >= 1.0 - pol.eps_eq))

    def __le__(self, other):
        return bool(np.all(self.matrix <= other.matrix + DEFAULT_POLICY.eps_leq))

    def __repr__(self):
        return self.name


class VagueOp:
    """A fuzzy ternary relation on a finite carrier."""

    def __init__(self, carrier: Carrier, table, name: str = "V"):
        t = np.asarray(table, dtype=float)
        n = len(carrier)
        if t.shape != (n, n, n):
            raise ValueError(f"expected an {n}x{n}x{n} table, got {t.shape}")
        if np.any((t < 0) | (t > 1)) or np.isnan(t).any():
            raise ValueError("vague operation values must lie in [0, 1]")
        self.carrier, self.table, self.name = carrier, t, name

    @classmethod
    def crisp(cls, m: Monoid, name=None):
        """1 where z = x o y, 0 elsewhere."""
        n = len(m)
        t = np.zeros((n, n, n))
        i, j = np.indices((n, n))
        t[i, j, m.table] = 1.0
        return cls(m.carrier, t, name or f"crisp({m.name})")

    def __call__(self, x, y, z) -> float:
        c = self.carrier
        return float(self.table[c.index_of(x), c.index_of(y), c.index_of(z)])

    def __repr__(self):
        return self.name


def _index_tuples(n: int, k: int, rng_seed: int, samples: int, exhaustive_max: int = EXHAUSTIVE_MAX):
    """All k-tuples of range(n) in lexicographic order, or a seeded sample."""
    if n <= exhaustive_max:
        return list(np.indices((n,) * k).reshape(k, -1)), {"mode": "exhaustive", "tuples": n ** k}
    rng = np.random.default_rng(rng_seed)
    idx = rng.integers(0, n, size=(k, samples))
    return list(idx), {"mode": "sampled", "tuples": samples, "seed": rng_seed}


def _first_violation(name, lhs, rhs, idx, labels, pol):
    bad = np.flatnonzero(lhs > rhs + pol.eps_leq)
    if len(bad) == 0:
        return ConditionResult(name, True)
    k = bad[0]
    w = tuple(labels[i[k]] for i in idx)
    return ConditionResult(name, False, w, lhs=float(lhs[k]), rhs=float(rhs[k]))


def check_indistinguishability(a, e_op: IndistinguishabilityOp,
                               pol: TolerancePolicy = DEFAULT_POLICY) -> CheckReport:
    """Reflexivity, symmetry and a-transitivity over all triples; whether E
    separates points is recorded in ``info['separates']``."""
    E = e_op.matrix
    lab = e_op.carrier.labels
    rep = CheckReport(f"{getattr(a, 'name', a)}-indistinguishability of {e_op.name}",
                      info={"separates": e_op.separates(pol)})
    d = np.flatnonzero(np.abs(np.diag(E) - 1.0) > pol.eps_eq)
    rep.add(ConditionResult("reflexivity", True) if len(d) == 0 else
            ConditionResult("reflexivity", False, (lab[d[0]],), lhs=float(E[d[0], d[0]]), rhs=1.0))
    s = np.argwhere(E != E.T)
    rep.add(ConditionResult("symmetry", True) if len(s) == 0 else
            ConditionResult("symmetry", False, (lab[s[0][0]], lab[s[0][1]]),
                            lhs=float(E[tuple(s[0])]), rhs=float(E[s[0][1], s[0][0]])))
    n = len(lab)
    x, y, z = np.indices((n, n, n)).reshape(3, -1)
    lhs = np.asarray(a(E[x, y], E[y, z]), dtype=float)
    rep.add(_first_violation("transitivity", lhs, E[x, z], (x, y, z), lab, pol))
    return rep


def check_regular(e_op: IndistinguishabilityOp, m: Monoid, pol: TolerancePolicy = DEFAULT_POLICY) -> CheckReport:
    """E(x, y) <= E(x o z, y o z) and E(x, y) <= E(z o x, z o y) for all triples."""
    E, t, lab = e_op.matrix, m.table, m.carrier.labels
    n = len(lab)
    x, y, z = np.indices((n, n, n)).reshape(3, -1)
    rep = CheckReport(f"regularity of {e_op.name} w.r.t. {m.name}")
    rep.add(_first_violation("right regular", E[x, y], E[t[x, z], t[y, z]], (x, y, z), lab, pol))
    rep.add(_first_violation("left regular", E[x, y], E[t[z, x], t[z, y]], (x, y, z), lab, pol))
    return rep


def vague_from_monoid(e_op: IndistinguishabilityOp, m: Monoid, pol: TolerancePolicy = DEFAULT_POLICY) -> VagueOp:
    """V(x, y, z) = E(x o y, z); E must be regular with respect to o."""
    rep = check_regular(e_op, m, pol)
    if not rep.passed:
        raise RegularityRequired(f"{e_op.name} is not regular w.r.t. {m.name}: {rep.failed[0].describe()}")
    return VagueOp(m.carrier, e_op.matrix[m.table, :], f"vague({e_op.name}, {m.name})")


def check_vague_binary(a, e_op: IndistinguishabilityOp, v: VagueOp, seed: int = 0,
                       samples: int = DEFAULT_SAMPLES, pol: TolerancePolicy = DEFAULT_POLICY) -> CheckReport:
    """Extensionality over 6-tuples, functionality over 4-tuples, totality per pair."""
    E, V, lab = e_op.matrix, v.table, v.carrier.labels
    n = len(lab)
    rep = CheckReport(f"{getattr(a, 'name', a)}-vague binary operation {v.name}")
    idx, mode = _index_tuples(n, 6, seed, samples)
    rep.info["extensionality"] = mode
    x, y, z, x2, y2, z2 = idx
    lhs = np.asarray(aggregate(a, [V[x, y, z], E[x, x2], E[y, y2], E[z, z2]]), dtype=float)
    rep.add(_first_violation("extensionality", lhs, V[x2, y2, z2], idx, lab, pol))
    x, y, z, z2 = np.indices((n,) * 4).reshape(4, -1)
    lhs = np.asarray(a(V[x, y, z], V[x, y, z2]), dtype=float)
    rep.add(_first_violation("functionality", lhs, E[z, z2], (x, y, z, z2), lab, pol))
    has_one = (V >= 1.0 - pol.eps_eq).any(axis=2)
    miss = np.argwhere(~has_one)
    rep.add(ConditionResult("totality", True) if len(miss) == 0 else
            ConditionResult("totality", False, (lab[miss[0][0]], lab[miss[0][1]]),
                            note="no z with value 1"))
    return rep


def vague_identities(v: VagueOp, pol: TolerancePolicy = DEFAULT_POLICY) -> list:
    """Indices e with V(e, x, x) = V(x, e, x) = 1 for every x."""
    n = len(v.carrier)
    r = np.arange(n)
    one = 1.0 - pol.eps_eq
    return [e for e in r if np.all(v.table[e, r, r] >= one) and np.all(v.table[r, e, r] >= one)]


def check_vague_monoid(a, e_op: IndistinguishabilityOp, v: VagueOp, seed: int = 0,
                       samples: int = DEFAULT_SAMPLES, pol: TolerancePolicy = DEFAULT_POLICY) -> CheckReport:
    """Graded associativity over (x, y, z, d, m, q, w) and an identity search."""
    E, V, lab = e_op.matrix, v.table, v.carrier.labels
    n = len(lab)
    rep = CheckReport(f"{getattr(a, 'name', a)}-vague monoid {v.name}")
    idx, mode = _index_tuples(n, 7, seed, samples)
    rep.info["associativity"] = mode
    x, y, z, d, m, q, w = idx
    lhs = np.asarray(aggregate(a, [V[y, z, d], V[x, d, m], V[x, y, q], V[q, z, w]]), dtype=float)
    rep.add(_first_violation("associativity", lhs, E[m, w], idx, lab, pol))
    ids = vague_identities(v, pol)
    rep.info["identities"] = [lab[i] for i in ids]
    rep.add(ConditionResult("identity", bool(ids), note="" if ids else "no element is a two-sided identity"))
    return rep


def associated_monoid(v: VagueOp, e_op: IndistinguishabilityOp, pol: TolerancePolicy = DEFAULT_POLICY) -> Monoid:
    """x o y := the unique z with V(x, y, z) = 1 (E must separate points)."""
    if not e_op.separates(pol):
        raise SeparationViolated(f"{e_op.name} does not separate points")
    lab = v.carrier.labels
    ones = v.table >= 1.0 - pol.eps_eq
    counts = ones.sum(axis=2)
    miss = np.argwhere(counts == 0)
    if len(miss):
        i, j = miss[0]
        raise MissingProduct(f"no z with {v.name}({lab[i]}, {lab[j]}, z) = 1")
    many = np.argwhere(counts > 1)
    if len(many):
        i, j = many[0]
        zs = [lab[k] for k in np.flatnonzero(ones[i, j])]
        raise SeparationViolated(f"{v.name}({lab[i]}, {lab[j]}, z) = 1 for several z: {zs}")
    table = ones.argmax(axis=2)
    ids = vague_identities(v, pol)
    if not ids:
        raise MissingProduct(f"{v.name} has no identity element")
    return Monoid(v.carrier, table, v.carrier.values[ids[0]], f"assoc({v.name})", pol=pol)


def check_commutativity_correspondence(a, e_op: IndistinguishabilityOp, v: VagueOp, m: Monoid,
                                       pol: TolerancePolicy = DEFAULT_POLICY) -> CheckReport:
    """Vague commutativity of V agrees with commutativity of its associated monoid."""
    E, V = e_op.matrix, v.table
    n = len(m)
    x, y, p, w = np.indices((n,) * 4).reshape(4, -1)
    lhs = np.asarray(a(V[x, y, p], V[y, x, w]), dtype=float)
    vague_comm = _first_violation("vague commutativity", lhs, E[p, w], (x, y, p, w), m.carrier.labels, pol)
    crisp_comm = m.is_commutative()
    rep = CheckReport(f"commutativity correspondence for {v.name}",
                      info={"vague_commutative": vague_comm.passed, "monoid_commutative": crisp_comm,
                            "vague_witness": vague_comm.witness})
    rep.add(ConditionResult("correspondence", vague_comm.passed == crisp_comm,
                            note=f"vague={vague_comm.passed}, crisp={crisp_comm}"))
    return rep


class CarrierMap:
    """A map between finite carriers, stored as destination indices."""

    def __init__(self, src: Carrier, dst: Carrier, images, name="f"):
        self.src, self.dst, self.name = src, dst, name
        self.images = np.asarray(images, dtype=int)
        if self.images.shape != (len(src),) or self.images.min() < 0 or self.images.max() >= len(dst):
            raise ValueError("images must give one destination index per source element")

    @classmethod
    def identity(cls, carrier: Carrier):
        return cls(carrier, carrier, np.arange(len(carrier)), "id")

    @classmethod
    def constant(cls, src: Carrier, dst: Carrier, value, name=None):
        j = dst.index_of(value)
        if j is None:
            raise ValueError(f"{value!r} is not in the destination carrier")
        return cls(src, dst, np.full(len(src), j), name or f"const({value})")

    @classmethod
    def from_function(cls, src: Carrier, dst: Carrier, fn, name="f"):
        imgs = []
        for x in src.values:
            j = dst.index_of(fn(x))
            if j is None:
                raise ValueError(f"{name}({x:g}) = {fn(x)!r} is not in the destination carrier")
            imgs.append(j)
        return cls(src, dst, imgs, name)

    def __call__(self, x):
        return self.dst.values[self.images[self.src.index_of(x)]]


def check_homomorphism(f_map: CarrierMap, src, dst, pol: TolerancePolicy = DEFAULT_POLICY) -> CheckReport:
    """V(x, y, z) <= W(f x, f y, f z) for all triples; when that holds, also
    confirm f(e) acts as an identity of W on the image of f."""
    (V, _E), (W, _F) = src, dst
    n = len(f_map.src)
    lab = f_map.src.labels
    fi = f_map.images
    x, y, z = np.indices((n, n, n)).reshape(3, -1)
    rep = CheckReport(f"homomorphism {f_map.name}: {V.name} -> {W.name}",
                      info={"surjective": len(set(fi.tolist())) == len(f_map.dst)})
    cond = _first_violation("homomorphism", V.table[x, y, z], W.table[fi[x], fi[y], fi[z]], (x, y, z), lab, pol)
    rep.add(cond)
    if cond.passed:
        ids = vague_identities(V, pol)
        if ids:
            fe = fi[ids[0]]
            img = np.unique(fi)
            one = 1.0 - pol.eps_eq
            ok = bool(np.all(W.table[fe, img, img] >= one) and np.all(W.table[img, fe, img] >= one))
            rep.add(ConditionResult("identity preserved", ok,
                                    None if ok else (f"f(e)={f_map.dst.labels[fe]}",)))
    return rep


def kernel(f_map: CarrierMap, dst_e: IndistinguishabilityOp, dst_identity, name="ker") -> FuzzySubset:
    """sigma(x) = F(f(x), e'), with F the indistinguishability operator of the target."""
    j = f_map.dst.index_of(dst_identity)
    if j is None:
        raise ValueError(f"{dst_identity!r} is not in the destination carrier")
    return FuzzySubset.from_table(f_map.src, dst_e.matrix[f_map.images, j], f"{name}({f_map.name})")


# Graded, separating, regular indistinguishability operators for the corpus
# monoids.  Off-diagonal values lie in [lo, hi] with hi < 1.

def graded_for(m: Monoid, lo: float, hi: float, name=None) -> IndistinguishabilityOp:
    """Ultrametric-style E adapted to the shape of the corpus monoid ``m``.

    For max and capped addition E(x, y) grows with min(x, y); for min it
    grows with n - max(x, y); for the left-zero monoid the identity is
    farther from the other elements than they are from each other.  Every
    one of these is min-transitive and regular for its monoid.
    """
    v = m.values
    n = len(v)
    top = v.max()
    kind = getattr(m, "family", None)
    E = np.eye(n)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if kind in ("max", "capadd"):
                r = min(v[i], v[j]) / top
            elif kind == "min":
                r = (top - max(v[i], v[j])) / top
            elif kind == "leftzero":
                r = 0.0 if m.e_index in (i, j) else 1.0
            else:
                raise ValueError(f"no graded operator known for {m.name}")
            E[i, j] = lo + (hi - lo) * r
    return IndistinguishabilityOp(m.carrier, E, name or f"graded[{lo:g},{hi:g}]({m.name})")
