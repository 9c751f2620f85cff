"""Turn a parsed script into typed definitions and runnable checks.

Every definition is built eagerly, so construction invariants (generator
direction and anchors, identity ranges, closure of grid monoids, tiling of
piecewise domains) are reported with the span of the offending node.  Checks
are elaborated into closures that run later, in script order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .. import fuzzy_monoids as fm
from .. import vague as vg
from ..algebra import (
    BoundedLattice, Carrier, Monoid, OperationStructure, capped_add_monoid, check_lattice,
    check_monoid, grid_structure, lattice_from_tables, left_zero_monoid, max_monoid, min_monoid,
)
from ..connectives import BUILTIN_TCONORMS, BUILTIN_TNORMS, TConorm, TNorm
from ..errors import (
    ClosureError, ConstraintViolation, DomainGap, DomainOverlap, DuplicateName, FuzzAlgError,
    ScriptConstraintViolation, SourceSpan, TypeMismatch, UndefinedName,
)
from ..nullnorms import Nullnorm, check_nullnorm_axioms
from ..numerics import DEFAULT_POLICY, MonotoneFunction, TolerancePolicy, uniform_grid
from ..operators import BinaryOperator, MinAggregation
from ..report import ConditionResult
from ..uninorms import (
    CosMaxUninorm, CosMinUninorm, IdempotentUninorm, RepresentableUninorm, Uninorm, UMax, UMin,
    check_uninorm_axioms,
)
from . import ast
from .parser import parse

UNARY_BUILTINS = {"ln": math.log, "exp": math.exp, "sqrt": math.sqrt, "abs": abs}
VARIADIC_BUILTINS = {"min": min, "max": max}


class ScriptFunction:
    """A real function of one variable defined in a script."""

    def __init__(self, fn, name):
        self.fn, self.name = fn, name

    def __call__(self, x):
        return self.fn(x)

    def generator(self, pol) -> MonotoneFunction:
        """View as a strictly monotone generator; direction read off the interior."""
        a, b = self.fn(0.25), self.fn(0.75)
        if a == b:
            raise ConstraintViolation(f"{self.name} is not strictly monotone", constraint="strictly monotone")
        return MonotoneFunction(self.fn, increasing=b > a, name=self.name)


class ScriptFuzzySet:
    """A fuzzy subset that is materialized on whatever carrier a check uses."""

    def __init__(self, name, fn=None, carrier=None, entries=None, convention=None):
        self.name, self.fn, self.carrier, self.entries = name, fn, carrier, entries
        self.convention = convention

    def on(self, carrier: Carrier, pol) -> fm.FuzzySubset:
        if self.fn is not None:
            return fm.FuzzySubset.from_function(carrier, self.fn, self.name, pol)
        if carrier != self.carrier:
            raise ValueError(f"{self.name} is tabulated on a different carrier")
        return fm.FuzzySubset(carrier, [float(v) for v in self.entries], None, self.name, pol)


class IdentityMap:
    name = "id"


@dataclass
class ResultLine:
    label: str
    result: ConditionResult
    soft: bool = False


@dataclass
class CheckItem:
    name: str
    span: SourceSpan
    run: object  # callable () -> list[ResultLine]


@dataclass
class CheckedProgram:
    definitions: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)


_TYPE_NAMES = {
    float: "number", ScriptFunction: "function", TNorm: "tnorm", TConorm: "tconorm",
    Uninorm: "uninorm", Nullnorm: "nullnorm", Monoid: "monoid", BoundedLattice: "lattice",
    vg.IndistinguishabilityOp: "indist", vg.VagueOp: "vague", ScriptFuzzySet: "fuzzyset",
}


def type_name(v) -> str:
    for cls, name in _TYPE_NAMES.items():
        if isinstance(v, cls):
            return name
    return type(v).__name__


class Elaborator:
    def __init__(self, pol: TolerancePolicy = DEFAULT_POLICY):
        self.pol = pol
        self.env = {}
        self.prog = CheckedProgram(self.env)

    # entry

    def program(self, tree: ast.Program) -> CheckedProgram:
        for stmt in tree.statements:
            if isinstance(stmt, ast.Let):
                if stmt.name in self.env:
                    raise DuplicateName(f"{stmt.name!r} is already defined", stmt.name_span)
                self.env[stmt.name] = self.value(stmt.value, stmt.name)
            else:
                self.prog.checks.append(self.check(stmt))
        return self.prog

    def guard(self, span, thunk):
        """Run a constructor, attaching ``span`` to library constraint errors."""
        try:
            return thunk()
        except ConstraintViolation as exc:
            if isinstance(exc, ScriptConstraintViolation):
                raise
            raise ScriptConstraintViolation(str(exc), span, exc.constraint) from exc
        except ClosureError as exc:
            raise ScriptConstraintViolation(str(exc), span, "closure") from exc
        except (ValueError, FuzzAlgError) as exc:
            raise ScriptConstraintViolation(str(exc), span) from exc

    # values

    def value(self, node, name=None):
        if isinstance(node, ast.FnDef):
            return ScriptFunction(self.compile(node.body, node.param), name or "fn")
        if isinstance(node, ast.Piecewise):
            return ScriptFunction(self.piecewise(node), name or "piecewise")
        if isinstance(node, ast.Ctor):
            return self.ctor(node, name)
        if isinstance(node, ast.Name):
            return self.lookup(node)
        return self.number(node)

    def lookup(self, node: ast.Name):
        if node.id in self.env:
            return self.env[node.id]
        raise UndefinedName(f"{node.id!r} is not defined", node.span)

    def number(self, node) -> float:
        if isinstance(node, ast.Name) and node.id in self.env:
            v = self.env[node.id]
            if not isinstance(v, float):
                raise TypeMismatch(f"{node.id!r} is a {type_name(v)}, expected a number", node.span)
            return v
        try:
            return float(self.compile(node, None)(None))
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise TypeMismatch(f"constant expression cannot be evaluated: {exc}", node.span) from exc

    def integer(self, node) -> int:
        v = self.number(node)
        if not float(v).is_integer():
            raise TypeMismatch(f"expected an integer, got {v:g}", node.span)
        return int(v)

    def symbol(self, node, choices) -> str:
        if not isinstance(node, ast.Name) or node.id not in choices:
            raise TypeMismatch(f"expected one of {', '.join(choices)}", node.span)
        return node.id

    # expressions

    def compile(self, node, param):
        """Compile an expression of one variable (``param``) to a closure."""
        c = lambda n: self.compile(n, param)
        if isinstance(node, ast.Num):
            v = node.value
            return lambda x: v
        if isinstance(node, ast.Inf):
            return lambda x: math.inf
        if isinstance(node, ast.Group):
            return c(node.inner)
        if isinstance(node, ast.Name):
            if node.id == param:
                return lambda x: x
            v = self.lookup(node)
            if not isinstance(v, float):
                raise TypeMismatch(f"{node.id!r} is a {type_name(v)}, expected a number", node.span)
            return lambda x: v
        if isinstance(node, ast.Unary):
            f = c(node.operand)
            return lambda x: -f(x)
        if isinstance(node, ast.Binary):
            a, b = c(node.left), c(node.right)
            op = {"+": lambda p, q: p + q, "-": lambda p, q: p - q, "*": lambda p, q: p * q,
                  "/": lambda p, q: p / q, "^": math.pow}[node.op]
            return lambda x: op(a(x), b(x))
        if isinstance(node, ast.Call):
            args = [c(a) for a in node.args]
            if node.func in UNARY_BUILTINS:
                if len(args) != 1:
                    raise TypeMismatch(f"{node.func} takes one argument", node.span)
                f, (a,) = UNARY_BUILTINS[node.func], args
                return lambda x: f(a(x))
            if node.func in VARIADIC_BUILTINS:
                if not args:
                    raise TypeMismatch(f"{node.func} needs at least one argument", node.span)
                f = VARIADIC_BUILTINS[node.func]
                return lambda x: f(g(x) for g in args)
            target = self.env.get(node.func)
            if target is None:
                raise UndefinedName(f"{node.func!r} is not defined", node.span)
            if not isinstance(target, ScriptFunction):
                raise TypeMismatch(f"{node.func!r} is a {type_name(target)}, not a function", node.span)
            if len(args) != 1:
                raise TypeMismatch(f"{node.func} takes one argument", node.span)
            (a,) = args
            return lambda x: target(a(x))
        raise TypeMismatch("expected an arithmetic expression", node.span)

    def piecewise(self, node: ast.Piecewise):
        pieces = []
        for iv, body in node.pieces:
            lo, hi = self.number(iv.lo), self.number(iv.hi)
            closed_lo, closed_hi = iv.open_bracket == "[", iv.close_bracket == "]"
            if lo > hi or (lo == hi and not (closed_lo and closed_hi)):
                raise DomainGap(f"interval {iv.open_bracket}{lo:g}, {hi:g}{iv.close_bracket} is empty", iv.span)
            pieces.append((lo, hi, closed_lo, closed_hi, self.compile(body, node.param), iv.span))
        if not pieces:
            raise DomainGap("piecewise function has no pieces", node.span)
        pieces.sort(key=lambda p: (p[0], not p[2]))
        first = pieces[0]
        if first[0] > 0.0 or (first[0] == 0.0 and not first[2]):
            raise DomainGap("the domain [0, 1] is not covered at its left end", first[5])
        if first[0] < 0.0:
            raise DomainOverlap("interval extends below 0", first[5])
        for prev, cur in zip(pieces, pieces[1:]):
            if cur[0] > prev[1] or (cur[0] == prev[1] and not prev[3] and not cur[2]):
                raise DomainGap(f"no piece covers the points between {prev[1]:g} and {cur[0]:g}", cur[5])
            if cur[0] < prev[1] or (cur[0] == prev[1] and prev[3] and cur[2]):
                raise DomainOverlap(f"pieces overlap at {cur[0]:g}", cur[5])
        last = pieces[-1]
        if last[1] < 1.0 or (last[1] == 1.0 and not last[3]):
            raise DomainGap("the domain [0, 1] is not covered at its right end", last[5])
        if last[1] > 1.0:
            raise DomainOverlap("interval extends above 1", last[5])

        def fn(x):
            for lo, hi, clo, chi, body, _ in pieces:
                if (lo < x or (clo and x == lo)) and (x < hi or (chi and x == hi)):
                    return body(x)
            raise ValueError(f"{x} is outside the piecewise domain")

        return fn

    # typed argument access

    def operand(self, node, name=None):
        """Evaluate an argument that may be a reference, inline ctor or number."""
        if isinstance(node, ast.Ctor):
            return self.ctor(node, name)
        if isinstance(node, ast.FnDef):
            return ScriptFunction(self.compile(node.body, node.param), name or "fn")
        if isinstance(node, ast.Name) and node.id in self.env:
            return self.env[node.id]
        if isinstance(node, ast.Name) and node.id in UNARY_BUILTINS:
            return ScriptFunction(UNARY_BUILTINS[node.id], node.id)
        if isinstance(node, ast.Name):
            raise UndefinedName(f"{node.id!r} is not defined", node.span)
        return self.number(node)

    def typed(self, node, *types, what=None):
        if isinstance(node, ast.Name) and node.id not in self.env:
            if TNorm in types and node.id in BUILTIN_TNORMS:
                return BUILTIN_TNORMS[node.id]
            if TConorm in types and node.id in BUILTIN_TCONORMS:
                return BUILTIN_TCONORMS[node.id]
            if MinAggregation in types and node.id == "min":
                return MinAggregation(2)
        v = self.operand(node)
        if not isinstance(v, types):
            want = what or " or ".join(_TYPE_NAMES.get(t, t.__name__) for t in types)
            raise TypeMismatch(f"expected {want}, got {type_name(v)}", node.span)
        return v

    def generator(self, node) -> MonotoneFunction:
        fn = self.typed(node, ScriptFunction)
        return self.guard(node.span, lambda: fn.generator(self.pol))

    def nargs(self, node: ast.Ctor, lo, hi=None):
        args = node.args or []
        hi = lo if hi is None else hi
        if not lo <= len(args) <= hi:
            count = str(lo) if lo == hi else f"{lo} to {hi}"
            raise TypeMismatch(f"{node.kind} {node.form or ''} takes {count} arguments, got {len(args)}",
                               node.span)
        return args

    def clause(self, node: ast.Ctor, word, required=True):
        for w, arg in node.clauses:
            if w == word:
                return arg
        if required:
            raise TypeMismatch(f"{node.kind} {node.form or ''} needs a '{word}' clause", node.span)
        return None

    # constructors

    def ctor(self, node: ast.Ctor, name=None):
        build = getattr(self, f"ctor_{node.kind}")
        return build(node, name)

    def ctor_tnorm(self, node, name):
        if node.form == "gen":
            (g,) = self.nargs(node, 1)
            f = self.generator(g)
            return self.guard(node.span, lambda: TNorm.from_generator(f, self.pol))
        if node.form in BUILTIN_TNORMS and node.args is None:
            return BUILTIN_TNORMS[node.form]
        raise TypeMismatch(f"unknown t-norm {node.form!r}; use min, product, lukasiewicz, drastic or gen(t)",
                           node.span)

    def ctor_tconorm(self, node, name):
        if node.form == "gen":
            (g,) = self.nargs(node, 1)
            f = self.generator(g)
            return self.guard(node.span, lambda: TConorm.from_generator(f, self.pol))
        if node.form in BUILTIN_TCONORMS and node.args is None:
            return BUILTIN_TCONORMS[node.form]
        raise TypeMismatch(f"unknown t-conorm {node.form!r}; use max, probsum, lukasiewicz, drastic or gen(g)",
                           node.span)

    def ctor_uninorm(self, node, name):
        f = node.form
        if f in ("umin", "umax"):
            T, S, e = self.nargs(node, 3)
            cls = UMin if f == "umin" else UMax
            t, s, ev = self.typed(T, TNorm), self.typed(S, TConorm), self.number(e)
            return self.guard(node.span, lambda: cls(t, s, ev))
        if f == "idem":
            args = self.nargs(node, 2, 3)
            g = self.typed(args[0], ScriptFunction)
            e = self.number(args[1])
            tie = self.symbol(args[2], ("take_min", "take_max")) if len(args) == 3 else "take_min"
            return self.guard(node.span, lambda: IdempotentUninorm(g, e, tie, self.pol))
        if f == "rep":
            args = self.nargs(node, 2, 3)
            h = self.generator(args[0])
            e = self.number(args[1])
            b = self.symbol(args[2], ("conjunctive", "disjunctive")) if len(args) == 3 else "conjunctive"
            return self.guard(node.span, lambda: RepresentableUninorm(h, e, b, self.pol))
        if f == "cosmin":
            args = self.nargs(node, 6, 7)
            T1, lam, T2, u = self.typed(args[0], TNorm), self.number(args[1]), self.typed(args[2], TNorm), \
                self.number(args[3])
            h, e = self.generator(args[4]), self.number(args[5])
            corner = self.symbol(args[6], ("take_lambda", "take_one")) if len(args) == 7 else "take_lambda"
            return self.guard(node.span, lambda: CosMinUninorm.with_identity(T1, lam, T2, u, h, e, corner,
                                                                             pol=self.pol))
        if f == "cosmax":
            args = self.nargs(node, 6, 7)
            h, e, v = self.generator(args[0]), self.number(args[1]), self.number(args[2])
            S1, om, S2 = self.typed(args[3], TConorm), self.number(args[4]), self.typed(args[5], TConorm)
            corner = self.symbol(args[6], ("take_zero", "take_omega")) if len(args) == 7 else "take_omega"
            return self.guard(node.span, lambda: CosMaxUninorm.with_identity(h, e, v, S1, om, S2, corner,
                                                                             pol=self.pol))
        raise TypeMismatch(f"unknown uninorm form {f!r}; use umin, umax, idem, rep, cosmin or cosmax", node.span)

    def ctor_nullnorm(self, node, name):
        S, k, T = self.nargs(node, 3)
        s, kv, t = self.typed(S, TConorm), self.number(k), self.typed(T, TNorm)
        return self.guard(node.span, lambda: Nullnorm(s, kv, t, self.pol))

    def ctor_monoid(self, node, name):
        f = node.form
        label = name or "M"
        if f == "grid":
            (n,) = self.nargs(node, 1)
            op = self.typed(self.clause(node, "with"), BinaryOperator, what="an operator")
            e = self.number(self.clause(node, "identity"))
            nv = self.integer(n)
            m = self.guard(node.span, lambda: Monoid.grid(op, nv, e, pol=self.pol))
            m.name = label
            return m
        if f == "set":
            if not isinstance(node.literal, ast.SetLit):
                raise TypeMismatch("monoid set needs a {...} element list", node.span)
            values, labels = self.elements(node.literal)
            tab = self.clause(node, "table")
            if not isinstance(tab, ast.TableLit):
                raise TypeMismatch("table clause needs a {[...], ...} literal", tab.span)
            lookup = dict(zip(labels, values)) if labels else None
            rows = [[self.element(c, lookup) for c in row] for row in tab.rows]
            e = self.element(self.clause(node, "identity"), lookup)
            return self.guard(node.span, lambda: Monoid.from_table(values, rows, e, labels, label, pol=self.pol))
        builders = {"max": max_monoid, "min": min_monoid, "capadd": capped_add_monoid, "leftzero": left_zero_monoid}
        if f in builders:
            (n,) = self.nargs(node, 1)
            nv = self.integer(n)
            m = self.guard(node.span, lambda: builders[f](nv))
            m.name = label
            return m
        raise TypeMismatch(f"unknown monoid form {f!r}; use grid, set, max, min, capadd or leftzero", node.span)

    def elements(self, lit: ast.SetLit):
        """Numeric elements, or labels (numbered 0, 1, ...) when given as names."""
        if all(isinstance(i, ast.Name) and i.id not in self.env for i in lit.items):
            labels = [i.id for i in lit.items]
            return [float(k) for k in range(len(labels))], labels
        return [self.number(i) for i in lit.items], None

    def element(self, node, lookup):
        if lookup is not None:
            if not isinstance(node, ast.Name) or node.id not in lookup:
                raise TypeMismatch("expected an element label", node.span)
            return lookup[node.id]
        return self.number(node)

    def ctor_lattice(self, node, name):
        if node.form in ("chain", "boolean"):
            (n,) = self.nargs(node, 1)
            nv = self.integer(n)
            build = BoundedLattice.chain if node.form == "chain" else BoundedLattice.boolean
            return self.guard(node.span, lambda: build(nv))
        if node.form is None and isinstance(node.literal, ast.SetLit):
            labels = [self.label(i) for i in node.literal.items]
            meet, join = self.clause(node, "meet"), self.clause(node, "join")
            for t in (meet, join):
                if not isinstance(t, ast.TableLit):
                    raise TypeMismatch("meet/join need {[...], ...} tables", t.span)
            mr = [[self.label(c) for c in row] for row in meet.rows]
            jr = [[self.label(c) for c in row] for row in join.rows]
            return self.guard(node.span, lambda: lattice_from_tables(labels, mr, jr, name or "L"))
        raise TypeMismatch("use lattice chain(n), boolean(k) or {elements} meet {...} join {...}", node.span)

    def label(self, node) -> str:
        if isinstance(node, ast.Name):
            return node.id
        v = self.number(node)
        return str(int(v)) if v.is_integer() else f"{v:g}"

    def ctor_indist(self, node, name):
        m = self.typed(self.clause(node, "over"), Monoid)
        c = m.carrier
        label = name or "E"
        if node.form == "crisp":
            return vg.IndistinguishabilityOp.crisp(c, label)
        if node.form == "total":
            return vg.IndistinguishabilityOp.total(c, label)
        if node.form == "table" and isinstance(node.literal, ast.TableLit):
            rows = [[self.number(x) for x in row] for row in node.literal.rows]
            return self.guard(node.span, lambda: vg.IndistinguishabilityOp(c, rows, label))
        raise TypeMismatch("use indist crisp|total over M or indist table {[...]} over M", node.span)

    def ctor_vague(self, node, name):
        if node.form != "from":
            raise TypeMismatch("use vague from(E, M)", node.span)
        E, M = self.nargs(node, 2)
        e, m = self.typed(E, vg.IndistinguishabilityOp), self.typed(M, Monoid)
        v = self.guard(node.span, lambda: vg.vague_from_monoid(e, m, self.pol))
        v.name = name or v.name
        v.base_monoid = m
        return v

    def ctor_fuzzyset(self, node, name):
        label = name or "sigma"
        if node.form == "fn":
            return ScriptFuzzySet(label, fn=self.compile(node.literal.body, node.literal.param))
        if node.form == "table":
            if not isinstance(node.literal, ast.SetLit):
                raise TypeMismatch("fuzzyset table needs a {...} value list", node.span)
            m = self.typed(self.clause(node, "over"), Monoid)
            if len(node.literal.items) != len(m):
                raise TypeMismatch(f"{len(node.literal.items)} values for a carrier of {len(m)}", node.literal.span)
            entries = [self.label(i) if isinstance(i, ast.Name) and i.id not in self.env else self.number(i)
                       for i in node.literal.items]
            return ScriptFuzzySet(label, carrier=m.carrier, entries=entries)
        if node.form == "compose":
            inv, f, t = self.nargs(node, 3)
            if not isinstance(inv, ast.Call) or inv.func not in ("invgen", "neginvgen") or len(inv.args) != 1:
                raise TypeMismatch("first argument must be invgen(h) or neginvgen(h)", inv.span)
            if not isinstance(t, ast.Call) or t.func != "gen" or len(t.args) != 1:
                raise TypeMismatch("third argument must be gen(t)", t.span)
            h = self.generator(inv.args[0])
            fmap = self.typed(f, ScriptFunction)
            tg = self.generator(t.args[0])
            conv = "inverse" if inv.func == "invgen" else "negated"
            s = fm.sigma_from_generators(h, fmap, tg, conv, Carrier.grid(2), self.pol)
            return ScriptFuzzySet(label, fn=s.fn, convention=conv)
        if node.form == "kernel":
            f, E, e = self.nargs(node, 3)
            eop = self.typed(E, vg.IndistinguishabilityOp)
            fmap = self.carrier_map(f, eop.carrier, eop.carrier)
            ev = self.number(e)
            s = self.guard(node.span, lambda: vg.kernel(fmap, eop, ev, label))
            return ScriptFuzzySet(label, carrier=s.carrier, entries=list(s.values))
        raise TypeMismatch("use fuzzyset fn(x) ..., table {...} over M, compose(...) or kernel(f, E, e)",
                           node.span)

    def carrier_map(self, node, src, dst):
        if isinstance(node, ast.Name) and node.id == "id" and "id" not in self.env:
            if src != dst:
                raise TypeMismatch("id needs identical source and target carriers", node.span)
            return vg.CarrierMap.identity(src)
        fn = self.typed(node, ScriptFunction)
        return self.guard(node.span, lambda: vg.CarrierMap.from_function(src, dst, fn, fn.name))

    # checks

    def check(self, node: ast.Check) -> CheckItem:
        handler = getattr(self, f"check_{node.name}", None)
        if handler is None:
            raise TypeMismatch(f"unknown check {node.name!r}; known: {', '.join(CHECK_NAMES)}", node.span)
        return CheckItem(node.name, node.span, handler(node))

    def cargs(self, node, lo, hi=None):
        hi = lo if hi is None else hi
        if not lo <= len(node.args) <= hi:
            count = str(lo) if lo == hi else f"{lo} to {hi}"
            raise TypeMismatch(f"check {node.name} takes {count} arguments, got {len(node.args)}", node.span)
        return node.args

    def grid_n(self, node, default=None) -> int:
        if isinstance(node.domain, ast.GridDomain):
            n = self.integer(node.domain.n)
            if n < 2:
                raise TypeMismatch("grid needs at least 2 points", node.domain.span)
            return n
        if default is None:
            raise TypeMismatch(f"check {node.name} needs 'on grid(n)'", node.span)
        return default

    def structure(self, node, arg, identity_from_op=True):
        """A monoid argument, or a t-norm/t-conorm sampled on the check's grid."""
        v = self.typed(arg, Monoid, TNorm, TConorm, what="a monoid, t-norm or t-conorm")
        if isinstance(v, Monoid):
            return v
        return grid_structure(v, self.grid_n(node), v.identity, self.pol)

    def _submonoid(self, node, a, sigma, m, fn=None):
        pol = self.pol

        def run():
            s = sigma.on(m.carrier, pol)
            rep = (fn or fm.check_u_fuzzy_submonoid)(a, m, s, pol=pol)
            return [ResultLine(f"{node.name}-inequality", rep["inequality"]),
                    ResultLine("identity-condition", rep["identity"], soft=True)]
        return run

    def check_usubnorm(self, node):
        s, U, T = self.cargs(node, 3)
        sigma, u = self.typed(s, ScriptFuzzySet), self.typed(U, BinaryOperator, what="an operator")
        t = self.typed(T, TNorm)
        return self._submonoid(node, u, sigma, grid_structure(t, self.grid_n(node, 101), 1.0, self.pol))

    def check_usubconorm(self, node):
        s, U, S = self.cargs(node, 3)
        sigma, u = self.typed(s, ScriptFuzzySet), self.typed(U, BinaryOperator, what="an operator")
        t = self.typed(S, TConorm)
        return self._submonoid(node, u, sigma, grid_structure(t, self.grid_n(node, 101), 0.0, self.pol))

    def check_usubmonoid(self, node):
        s, U, M = self.cargs(node, 3)
        return self._submonoid(node, self.typed(U, Uninorm), self.typed(s, ScriptFuzzySet), self.structure(node, M))

    def check_fsubmonoid(self, node):
        s, F, M = self.cargs(node, 3)
        f = self.typed(F, Nullnorm)
        sigma, m = self.typed(s, ScriptFuzzySet), self.structure(node, M)
        run = self._submonoid(node, f, sigma, m, fm.check_f_fuzzy_submonoid)

        def with_bound():
            lines = run()
            lo = float(sigma.on(m.carrier, self.pol).values.min())
            passed = lines[0].result.passed and lines[1].result.passed
            ok = (not passed) or lo >= f.k - self.pol.eps_leq
            lines.append(ResultLine(f"{node.name}-lower-bound", ConditionResult(
                "lower bound", ok, None if ok else (lo, f.k), note=f"min sigma={lo:.12g}, k={f.k:g}")))
            return lines
        return with_bound

    def check_asubmonoid(self, node):
        args = self.cargs(node, 3, 4)
        sigma = self.typed(args[0], ScriptFuzzySet)
        a = self.typed(args[1], BinaryOperator, MinAggregation, what="an aggregation operator")
        m = self.structure(node, args[2])
        arity = self.integer(args[3]) if len(args) == 4 else None
        pol = self.pol

        def run():
            rep = fm.check_a_fuzzy_submonoid(a, m, sigma.on(m.carrier, pol), arity=arity, pol=pol)
            return [ResultLine(f"{node.name}-inequality", rep["inequality"]),
                    ResultLine("identity-condition", rep["identity"], soft=True)]
        return run

    def check_lsubmonoid(self, node):
        args = self.cargs(node, 3, 4)
        sigma, lat, m = self.typed(args[0], ScriptFuzzySet), self.typed(args[1], BoundedLattice), \
            self.typed(args[2], Monoid)
        conn = self.symbol(args[3], ("meet", "join")) if len(args) == 4 else "meet"
        if sigma.entries is None or sigma.carrier != m.carrier:
            raise TypeMismatch("lsubmonoid needs a table fuzzyset over the same monoid", args[0].span)
        lab = [str(v) if not isinstance(v, float) else (str(int(v)) if v.is_integer() else f"{v:g}")
               for v in sigma.entries]
        ls = self.guard(args[0].span, lambda: fm.LatticeFuzzySubset(m.carrier, lat, lab, sigma.name))

        def run():
            rep = fm.check_lattice_fuzzy_submonoid(lat, m, ls, conn)
            return [ResultLine(f"{node.name}-inequality", rep["inequality"]),
                    ResultLine("identity-condition", rep["identity"], soft=True)]
        return run

    def check_subadditive(self, node):
        (f,) = self.cargs(node, 1)
        fn = self.typed(f, ScriptFunction)
        if not isinstance(node.domain, ast.SamplesDomain):
            raise TypeMismatch("subadditive needs 'on samples {...}'", node.span)
        pts = [self.number(i) for i in node.domain.items]

        def run():
            rep = fm.subadditive_on(fn, pts, self.pol)
            return [ResultLine(f"{node.name}", c) for c in rep.conditions]
        return run

    def check_characterize(self, node):
        s, U, t = self.cargs(node, 3)
        sigma, u = self.typed(s, ScriptFuzzySet), self.typed(U, RepresentableUninorm)
        tg = self.generator(t)
        n = self.grid_n(node, 51)

        def run():
            r = fm.characterize_subnorm_via_f(u, tg, sigma.on(Carrier.grid(n), self.pol), pol=self.pol)
            agree = r["direct_verdict"] == r["subadditivity_verdict"]
            return [ResultLine(f"{node.name}-direct", r["direct_report"]["inequality"]),
                    ResultLine(f"{node.name}-subadditive", r["subadditivity_report"].conditions[0]),
                    ResultLine(f"{node.name}-agreement", ConditionResult(
                        "agreement", agree, note=f"direct={r['direct_verdict']}, "
                                                 f"subadditive={r['subadditivity_verdict']}"))]
        return run

    def check_axioms(self, node):
        (x,) = self.cargs(node, 1)
        op = self.typed(x, TNorm, TConorm, Uninorm, Nullnorm, what="an operator")
        g = uniform_grid(self.grid_n(node, 21))

        def run():
            if isinstance(op, Nullnorm):
                rep = check_nullnorm_axioms(op, op.k, g, self.pol)
            else:
                rep = check_uninorm_axioms(op, op.identity, g, self.pol)
            return self.lines(node, rep)
        return run

    def lines(self, node, rep):
        return [ResultLine(f"{node.name}-{c.name.replace(' ', '-')}", c) for c in rep.conditions]

    def check_monoid(self, node):
        (m,) = self.cargs(node, 1)
        mon = self.typed(m, Monoid)
        return lambda: self.lines(node, check_monoid(mon, self.pol))

    def check_lattice(self, node):
        (x,) = self.cargs(node, 1)
        lat = self.typed(x, BoundedLattice)
        return lambda: self.lines(node, check_lattice(lat))

    def check_indist(self, node):
        A, E = self.cargs(node, 2)
        a = self.typed(A, BinaryOperator, MinAggregation, what="an aggregation operator")
        e = self.typed(E, vg.IndistinguishabilityOp)
        return lambda: self.lines(node, vg.check_indistinguishability(a, e, self.pol))

    def check_regular(self, node):
        E, M = self.cargs(node, 2)
        e, m = self.typed(E, vg.IndistinguishabilityOp), self.typed(M, Monoid)
        return lambda: self.lines(node, vg.check_regular(e, m, self.pol))

    def check_vaguebinary(self, node):
        A, E, V = self.cargs(node, 3)
        a = self.typed(A, BinaryOperator, MinAggregation, what="an aggregation operator")
        e, v = self.typed(E, vg.IndistinguishabilityOp), self.typed(V, vg.VagueOp)
        return lambda: self.lines(node, vg.check_vague_binary(a, e, v, pol=self.pol))

    def check_vaguemonoid(self, node):
        A, E, V = self.cargs(node, 3)
        a = self.typed(A, BinaryOperator, MinAggregation, what="an aggregation operator")
        e, v = self.typed(E, vg.IndistinguishabilityOp), self.typed(V, vg.VagueOp)
        return lambda: self.lines(node, vg.check_vague_monoid(a, e, v, pol=self.pol))

    def check_commutative(self, node):
        A, E, V = self.cargs(node, 3)
        a = self.typed(A, BinaryOperator, MinAggregation, what="an aggregation operator")
        e, v = self.typed(E, vg.IndistinguishabilityOp), self.typed(V, vg.VagueOp)

        def run():
            m = vg.associated_monoid(v, e, self.pol)
            return self.lines(node, vg.check_commutativity_correspondence(a, e, v, m, self.pol))
        return run

    def check_hom(self, node):
        f, src, dst = self.cargs(node, 3)
        pairs = []
        for p in (src, dst):
            if not isinstance(p, ast.Tuple_) or len(p.items) != 2:
                raise TypeMismatch("expected a pair (V, E)", p.span)
            pairs.append((self.typed(p.items[0], vg.VagueOp), self.typed(p.items[1], vg.IndistinguishabilityOp)))
        fmap = self.carrier_map(f, pairs[0][0].carrier, pairs[1][0].carrier)
        return lambda: self.lines(node, vg.check_homomorphism(fmap, pairs[0], pairs[1], self.pol))


CHECK_NAMES = sorted(n[len("check_"):] for n in dir(Elaborator) if n.startswith("check_"))


def elaborate(tree: ast.Program, pol: TolerancePolicy = DEFAULT_POLICY) -> CheckedProgram:
    return Elaborator(pol).program(tree)


def load(text: str, pol: TolerancePolicy = DEFAULT_POLICY) -> CheckedProgram:
    """Parse and elaborate script text."""
    return elaborate(parse(text), pol)
