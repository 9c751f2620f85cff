"""Reproduction suite: every acceptance criterion as a named, seeded check.

Each ``criterion_*`` function returns a :class:`CriterionResult`.  Seeds are
offsets from the ``seed`` argument so a run is reproducible end to end.
"""
from __future__ import annotations

import functools
import math
import time
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import fuzzy_monoids as fm
from . import vague as vg
from .algebra import Carrier, corpus_monoids, discrete_carrier, grid_structure, is_discrete_operator
from .connectives import S_D, S_L, S_M, S_P, T_D, T_L, T_M, T_P, TConorm, TNorm
from .errors import DslError
from .nullnorms import Nullnorm
from .numerics import DEFAULT_POLICY, MonotoneFunction, TolerancePolicy, uniform_grid
from .operators import MinAggregation
from .surfaces import read_surface, surface_csv
from .uninorms import (
    CosMaxUninorm, CosMinUninorm, IdempotentUninorm, LowerBlockMinOperator, check_uninorm_axioms,
    piecewise_log_generator, piecewise_reciprocal_generator, representable_log_uninorm,
    representable_reciprocal_uninorm, u_max, u_min,
)


@dataclass
class CriterionResult:
    key: str
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} [{self.key}] {self.title}: {self.detail}"


def fixture_text(name: str) -> str:
    return resources.files("fuzzalg").joinpath("fixtures").joinpath(name).read_text(encoding="utf-8")


def lukasiewicz_t() -> MonotoneFunction:
    return MonotoneFunction(lambda x: 1.0 - x, increasing=False, inverse=lambda y: 1.0 - y, name="t")


def _max_dev(a, b, n):
    g = uniform_grid(n)
    X, Y = np.meshgrid(g, g, indexing="ij")
    return float(np.max(np.abs(np.asarray(a(X, Y)) - np.asarray(b(X, Y)))))


def criterion_1(seed=0, pol=DEFAULT_POLICY):
    tg = TNorm.from_generator(lukasiewicz_t(), pol)
    sg = TConorm.from_generator(MonotoneFunction(lambda x: x, increasing=True, name="g"), pol)
    dt, ds = _max_dev(tg, T_L, 101), _max_dev(sg, S_L, 101)
    ok = dt <= 1e-9 and ds <= 1e-9
    return CriterionResult("1", "generator round trip", ok, f"max|T_gen - T_L|={dt:.3g}, max|S_gen - S_L|={ds:.3g}")


def criterion_2(seed=0, pol=DEFAULT_POLICY):
    u = representable_log_uninorm()
    g = uniform_grid(101)
    d_id = max(abs(u(0.5, float(y)) - y) for y in g)
    a, b = u(0.25, 0.25), u(0.75, 0.75)
    rep = check_uninorm_axioms(u, 0.5, uniform_grid(21), pol)
    ok = d_id <= 1e-9 and abs(a - 0.125) <= 1e-9 and abs(b - 0.875) <= 1e-9 and rep.passed
    return CriterionResult("2", "representable uninorm worked values", ok,
                           f"max|U(0.5,y)-y|={d_id:.3g}, U(0.25,0.25)={a:.12g}, U(0.75,0.75)={b:.12g}, "
                           f"axioms {'pass' if rep.passed else rep.failed[0].describe()}")


def _direct_log(x, y):
    if x == 0.0 or y == 0.0:
        return 0.0
    if x == 1.0 or y == 1.0:
        return 1.0
    h = lambda v: math.log(2 * v) if v < 0.5 else -math.log(2 - 2 * v)
    s = h(x) + h(y)
    return 0.5 * math.exp(s) if s < 0 else 1 - 0.5 * math.exp(-s)


def _direct_rec(x, y):
    if x == 0.0 or y == 0.0:
        return 0.0
    if x == 1.0 or y == 1.0:
        return 1.0
    h = lambda v: 1 - 1 / (2 * v) if v <= 0.5 else -1 / (2 * (v - 1)) - 1
    s = h(x) + h(y)
    return 1 / (2 * (1 - s)) if s <= 0 else 1 - 1 / (2 * (s + 1))


def criterion_3(seed=0, pol=DEFAULT_POLICY, n=101):
    parts, ok = [], True
    for name, op, direct in (("U_p", representable_log_uninorm(), _direct_log),
                             ("U_p2", representable_reciprocal_uninorm(), _direct_rec)):
        rows = read_surface(surface_csv(op, n))
        Z = np.array([r[2] for r in rows]).reshape(n, n)
        mono = min(float(np.diff(Z, axis=0).min()), float(np.diff(Z, axis=1).min()))
        dev = max(abs(v - direct(x, y)) for x, y, v in rows)
        good = mono >= -1e-9 and dev <= 1e-9
        ok &= good
        parts.append(f"{name}: min step {mono:.3g}, max|csv - direct|={dev:.3g}")
    return CriterionResult("3", "surface export monotone and exact", ok, "; ".join(parts))


def example_sigma(convention="inverse", n=201, pol=DEFAULT_POLICY):
    return fm.sigma_from_generators(piecewise_log_generator(), math.sqrt, lukasiewicz_t(), convention,
                                    Carrier.grid(n), pol)


def criterion_4(seed=0, pol=DEFAULT_POLICY):
    u = representable_log_uninorm()
    sigma = example_sigma("inverse", 201, pol)
    rep = fm.check_u_fuzzy_submonoid(u, grid_structure(T_L, 201, 1.0, pol), sigma, pol)
    ineq, ident = rep["inequality"], rep["identity"]
    return CriterionResult("4", "worked U-subnorm example on 201^2 grid", ineq.passed,
                           f"{ineq.describe()}; sigma(1)={sigma(1.0):.12g} "
                           f"(identity condition {'met' if ident.passed else 'not met'})")


def criterion_5(seed=0, pol=DEFAULT_POLICY, count=50):
    rng = np.random.default_rng(seed + 5)
    u = representable_log_uninorm()
    carrier = Carrier.grid(51)
    t = lukasiewicz_t()
    cases = [fm.random_piecewise_linear(rng, carrier, name=f"pl{k}") for k in range(count)]
    # positive controls built through the characterization itself
    for f, label in ((math.sqrt, "sqrt"), (lambda a: a, "id"), (lambda a: 0.5 * a, "half")):
        cases.append(fm.sigma_from_generators(piecewise_log_generator(), f, t, "negated", carrier, pol))
        cases[-1].name = f"neg-{label}"
    disagree, passes = [], 0
    for s in cases:
        r = fm.characterize_subnorm_via_f(u, t, s, pol=pol)
        passes += r["direct_verdict"]
        if r["direct_verdict"] != r["subadditivity_verdict"]:
            disagree.append(s.name)
    return CriterionResult("5", "subadditivity equivalence", not disagree,
                           f"{len(cases)} sigma ({count} random + 3 controls), {passes} pass directly, "
                           f"{len(disagree)} disagreements" + (f": {disagree[:5]}" if disagree else ""))


def _random_anchored(rng, carrier, e_index, name):
    s = fm.random_piecewise_linear(rng, carrier, name=name)
    v = s.values.copy()
    v[e_index] = 1.0
    if v.min() > 1.0 - 1e-6:
        v[(e_index + 1) % len(v)] = 0.5
    return fm.FuzzySubset.from_table(carrier, v, name)


def criterion_6(seed=0, pol=DEFAULT_POLICY, count=100):
    rng = np.random.default_rng(seed + 6)
    u = u_max(T_L, S_L, 0.5)
    monoids = [grid_structure(T_L, 51, 1.0, pol), grid_structure(S_L, 51, 0.0, pol),
               [m for m in corpus_monoids(6) if m.family == "capadd"][-1]]
    wrong = []
    for k in range(count):
        m = monoids[k % len(monoids)]
        s = _random_anchored(rng, m.carrier, m.e_index, f"r{k}")
        if fm.check_u_fuzzy_submonoid(u, m, s, pol).passed:
            wrong.append((s.name, m.name))
    ones = all(fm.check_u_fuzzy_submonoid(u, m, fm.FuzzySubset.constant(m.carrier), pol).passed for m in monoids)
    ok = not wrong and ones
    return CriterionResult("6", "disjunctive uninorm forces sigma = 1", ok,
                           f"{count} anchored random sigma, {len(wrong)} unexpected passes; "
                           f"sigma = 1 {'passes' if ones else 'fails'} on all {len(monoids)} monoids")


def _f_candidates(rng, carrier, k, count):
    x = carrier.array
    out = []
    for i in range(count):
        kind = i % 4
        if kind == 0:
            c = rng.uniform(k, 1.0)
            v = c + (1 - c) * x
        elif kind == 1:
            v = fm.random_step(rng, carrier, k, anchor=1.0).values
        elif kind == 2:
            v = np.maximum(fm.random_step(rng, carrier, k, anchor=1.0).values, rng.uniform(k, 1.0))
        else:
            v = fm.random_piecewise_linear(rng, carrier).values
        out.append(fm.FuzzySubset.from_table(carrier, v, f"c{i}"))
    return out


def criterion_7(seed=0, pol=DEFAULT_POLICY, count=100):
    rng = np.random.default_rng(seed + 7)
    bound_bad, fm_bad, passes, fm_passes = [], [], 0, 0
    for k in (0.25, 0.5, 0.75):
        F = Nullnorm(S_L, k, T_L)
        m = grid_structure(T_L, 21, 1.0, pol)
        for s in _f_candidates(rng, m.carrier, k, count):
            rep = fm.check_f_fuzzy_submonoid(F, m, s, pol)
            if rep.passed:
                passes += 1
                if not rep.info["min_sigma"] >= k - 1e-9:
                    bound_bad.append((k, s.name))
        FM = Nullnorm(S_L, k, T_M)
        mm = grid_structure(T_M, 21, 1.0, pol)
        for s in _f_candidates(rng, mm.carrier, k, count):
            verdict = fm.check_f_fuzzy_submonoid(FM, mm, s, pol).passed
            expect = abs(s(1.0) - 1.0) <= pol.eps_eq and s.values.min() >= k - pol.eps_leq
            fm_passes += verdict
            if verdict != expect:
                fm_bad.append((k, s.name))
    ok = not bound_bad and not fm_bad
    return CriterionResult("7", "F-bound and F_M characterization", ok,
                           f"<S_L,k,T_L>: {passes} passing sigma, {len(bound_bad)} below k; "
                           f"F_M: {fm_passes} passing, {len(fm_bad)} counterexamples")


def criterion_8(seed=0, pol=DEFAULT_POLICY, count=100):
    rng = np.random.default_rng(seed + 8)
    bad, stats = [], []
    for e in (0.25, 0.5, 0.75):
        op = LowerBlockMinOperator(T_L, e)
        for base, ident, anchor, direction in ((T_M, 1.0, 1.0, "decreasing"), (S_M, 0.0, 0.0, "increasing")):
            m = grid_structure(base, 101, ident, pol)
            npass = 0
            for i in range(count):
                s = fm.random_step(rng, m.carrier, e, anchor=anchor, name=f"s{i}")
                verdict = fm.check_u_fuzzy_submonoid(op, m, s, pol).passed
                expect, _ = fm.monotone_on_B(s, e, direction, pol)
                npass += verdict
                if verdict != expect:
                    bad.append((e, direction, s.name))
            stats.append(f"e={e:g}/{direction[:3]}:{npass}")
    return CriterionResult("8", "monotone-on-B equivalence", not bad,
                           f"{len(bad)} mismatches over {6 * count} step functions; passing per case "
                           + ", ".join(stats))


def criterion_9(seed=0, pol=DEFAULT_POLICY):
    ops = {"U_L": u_min(T_L, S_L, 0.5), "F_L": Nullnorm(S_L, 0.5, T_L)}
    bad = []
    for n in (1, 2, 5):
        for m in (1, 2, 5):
            c = discrete_carrier(0.5, n, m)
            for name, op in ops.items():
                ok, w = is_discrete_operator(op, c.values, pol)
                if not ok:
                    bad.append((name, n, m, w))
    return CriterionResult("9", "discrete L_{n,m} closure", not bad,
                           f"18 (operator, n, m) cases, {len(bad)} failures" + (f": {bad[:3]}" if bad else ""))


def vague_aggregators():
    return {"min": MinAggregation(2), "umin": u_min(T_L, S_L, 0.5), "nullnorm": Nullnorm(S_L, 0.25, T_M)}


def vague_candidates(m):
    c = m.carrier
    out = [vg.IndistinguishabilityOp.crisp(c), vg.IndistinguishabilityOp.total(c)]
    for lo, hi in ((0.2, 0.7), (0.1, 0.4), (0.3, 0.9), (0.25, 0.25), (0.4, 0.8)):
        out.append(vg.graded_for(m, lo, hi))
    return out


def vague_round_trip(a, E, m, pol=DEFAULT_POLICY) -> list:
    """Failed sub-checks of the vague round trip for one (a, E, M)."""
    V = vg.vague_from_monoid(E, m, pol)
    fails = []
    for rep in (vg.check_vague_binary(a, E, V, pol=pol), vg.check_vague_monoid(a, E, V, pol=pol)):
        fails += [c.describe() for c in rep.failed]
    A = vg.associated_monoid(V, E, pol)
    if not (np.array_equal(A.table, m.table) and A.e_index == m.e_index):
        fails.append("associated monoid differs")
    if not np.array_equal(V.table[:, m.e_index, :], E.matrix):
        fails.append("E != V(., e, .)")
    fails += [c.describe() for c in vg.check_commutativity_correspondence(a, E, V, A, pol).failed]
    ker = vg.kernel(vg.CarrierMap.identity(m.carrier), E, m.identity)
    fails += [c.describe() for c in fm.check_a_fuzzy_submonoid(a, A, ker, pol=pol).failed]
    return fails


def criterion_10(seed=0, pol=DEFAULT_POLICY):
    counts, bad = {}, []
    for an, a in vague_aggregators().items():
        counts[an] = 0
        for m in corpus_monoids(6):
            for E in vague_candidates(m):
                ci = vg.check_indistinguishability(a, E, pol)
                if not (ci.passed and ci.info["separates"] and vg.check_regular(E, m, pol).passed):
                    continue
                counts[an] += 1
                f = vague_round_trip(a, E, m, pol)
                if f:
                    bad.append((an, m.name, E.name, f[0]))
    ok = not bad and all(counts.values())
    return CriterionResult("10", "vague round trip", ok,
                           ", ".join(f"{k}: {v} instances" for k, v in counts.items())
                           + f"; {len(bad)} failures" + (f": {bad[:2]}" if bad else ""))


def shipped_uninorms():
    return [
        representable_log_uninorm(), representable_reciprocal_uninorm(),
        u_min(T_L, S_L, 0.5), u_max(T_L, S_L, 0.5), u_min(T_P, S_P, 0.3),
        IdempotentUninorm(lambda x: 1.0 - x, 0.5),
        CosMinUninorm.with_identity(T_L, 0.2, T_P, 0.4, piecewise_log_generator(), 0.7),
        CosMaxUninorm.with_identity(piecewise_log_generator(), 0.3, 0.6, S_P, 0.8, S_L),
    ]


def criterion_11(seed=0, pol=DEFAULT_POLICY):
    g = uniform_grid(101)
    cands = shipped_uninorms()
    bad, n = [], 0
    for family, conns, sig in (("identity_sigma_tnorm", (T_M, T_P, T_L, T_D), lambda x: x),
                               ("complement_sigma_tconorm", (S_M, S_P, S_L, S_D), lambda x: 1.0 - x)):
        for c in conns:
            rep = fm.nonexistence_probe(family, cands, g, c, pol)
            n += len(rep.conditions)
            bad += [(family, c.name, r.name) for r in rep.failed]
            m = grid_structure(c, 21, c.identity, pol)
            s = fm.FuzzySubset.from_function(m.carrier, sig, "sigma", pol)
            for u in cands:
                if fm.check_u_fuzzy_submonoid(u, m, s, pol)["inequality"].passed:
                    bad.append((family, c.name, f"{u.name} passes full check"))
    return CriterionResult("11", "nonexistence probes", not bad,
                           f"{n} (candidate, connective) probes, {len(bad)} without a violation"
                           + (f": {bad[:3]}" if bad else ""))


MALFORMED = {"bad_lex.fz": ("LexError", 3, 17), "bad_parse.fz": ("ParseError", 7, 26),
             "domain_gap.fz": ("DomainGap", 3, 3)}


@functools.lru_cache(maxsize=4)
def criterion_12(seed=0, pol=DEFAULT_POLICY):
    from .dsl import load, parse, run_source

    text = fixture_text("worked_example.fz")
    tree = parse(text)
    prog = load(text, pol)
    names = [c.name for c in prog.checks]
    ok_a = len(tree.statements) == 5 and names == ["usubnorm"]
    res = run_source(text, pol)
    ineq = res.lines[0]
    direct = criterion_4(seed, pol)
    ok_b = ineq.result.passed and direct.passed
    errs = []
    for fname, (kind, line, col) in MALFORMED.items():
        src = fixture_text(fname)
        try:
            load(src, pol)
            errs.append(f"{fname}: no error")
        except DslError as exc:
            got = (type(exc).__name__, exc.span.line, exc.span.col)
            if got != (kind, line, col):
                errs.append(f"{fname}: got {got}")
    ok_c = not errs
    detail = (f"(a) {len(tree.statements)} statements, checks {names}; "
              f"(b) script line '{_fmt_line(ineq)}'; "
              f"(c) {3 - len(errs)}/3 malformed fixtures positioned" + (f" {errs}" if errs else ""))
    return CriterionResult("12", "DSL fixture reproduction", ok_a and ok_b and ok_c, detail), (ok_a, ok_b, ok_c)


def _fmt_line(ln):
    from .dsl import format_line
    return format_line(ln)


def criterion_12a(seed=0, pol=DEFAULT_POLICY):
    r, (a, _, _) = criterion_12(seed, pol)
    return CriterionResult("12a", "DSL fixture parses and elaborates", a, r.detail.split("; ")[0])


def criterion_12b(seed=0, pol=DEFAULT_POLICY):
    r, (_, b, _) = criterion_12(seed, pol)
    return CriterionResult("12b", "DSL fixture reproduces the worked example", b, r.detail.split("; ")[1])


def criterion_12c(seed=0, pol=DEFAULT_POLICY):
    r, (_, _, c) = criterion_12(seed, pol)
    return CriterionResult("12c", "malformed fixtures give positioned errors", c, r.detail.split("; ")[2])


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11, criterion_12a, criterion_12b, criterion_12c]


def paper_suite(seed: int = 0, pol: TolerancePolicy = DEFAULT_POLICY) -> list:
    out = []
    for crit in CRITERIA:
        t0 = time.perf_counter()
        r = crit(seed, pol)
        r.seconds = time.perf_counter() - t0
        out.append(r)
    return out
