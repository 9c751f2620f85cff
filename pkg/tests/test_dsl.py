import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzalg.dsl import CHECK_NAMES, load, parse, pretty, run_source, tokenize
from fuzzalg.errors import (
    DomainGap, DomainOverlap, DslError, DuplicateName, LexError, ParseError, ScriptConstraintViolation,
    TypeMismatch, UndefinedName,
)
from fuzzalg.suite import MALFORMED, fixture_text

H = """let h = piecewise(x) {
  [0, 0.5) -> ln(2*x);
  [0.5, 1] -> -ln(-2*x + 2);
};
"""


# lexer

def test_token_kinds_and_positions():
    toks = tokenize("let a = 1.5e-3; # note\ncheck m(a);")
    kinds = [(t.kind, t.text) for t in toks]
    assert kinds[:5] == [("kw", "let"), ("ident", "a"), ("op", "="), ("number", "1.5e-3"), ("op", ";")]
    assert toks[5].text == "check" and (toks[5].span.line, toks[5].span.col) == (2, 1)
    assert toks[-1].kind == "eof"


def test_crlf_input_matches_lf():
    lf = fixture_text("worked_example.fz")
    crlf = lf.replace("\n", "\r\n")
    a = [(t.kind, t.text, t.span.line, t.span.col) for t in tokenize(lf)]
    b = [(t.kind, t.text, t.span.line, t.span.col) for t in tokenize(crlf)]
    assert a == b


def test_arrow_is_one_token():
    assert [t.text for t in tokenize("->")][:1] == ["->"]


# parser and pretty-printer

@pytest.mark.parametrize("name", ["worked_example.fz", "worked_example_negated.fz"])
def test_pretty_round_trip_on_fixtures(name):
    once = pretty(parse(fixture_text(name)))
    assert pretty(parse(once)) == once


def test_empty_program():
    assert parse("").statements == []
    assert run_source("").lines == []


@pytest.mark.parametrize("name", sorted(MALFORMED))
def test_malformed_fixtures_report_positions(name):
    kind, line, col = MALFORMED[name]
    text = fixture_text(name)
    with pytest.raises(DslError) as ei:
        load(text)
    err = ei.value
    assert err.kind == kind and (err.span.line, err.span.col) == (line, col)
    lines = text.split("\n")
    assert 1 <= err.span.line <= len(lines)
    assert 1 <= err.span.col <= len(lines[err.span.line - 1]) + 1


@pytest.mark.parametrize("src,exc", [
    ("let a = 1", ParseError),
    ("let = 1;", ParseError),
    ("check axioms(tnorm min) on grid(;", ParseError),
    ("let a = 1 $ 2;", LexError),
    ("let a = b;", UndefinedName),
    ("let a = 1; let a = 2;", DuplicateName),
    ("let t = tnorm nope;", TypeMismatch),
    ("check nosuch(1);", TypeMismatch),
    ("let f = fn(x) x; check axioms(f);", TypeMismatch),
    (H.replace("[0.5, 1]", "[0.4, 1]"), DomainOverlap),
    (H.replace("[0.5, 1]", "[0.5, 0.9]"), DomainGap),
    (H.replace("[0, 0.5)", "(0, 0.5)"), DomainGap),
])
def test_error_kinds(src, exc):
    with pytest.raises(exc) as ei:
        load(src)
    assert ei.value.span.line >= 1 and ei.value.span.col >= 1


def test_error_message_format():
    with pytest.raises(DslError) as ei:
        load("let a = b;")
    assert str(ei.value).startswith("1:9: NameError:")


def test_rep_with_wrong_zero_is_a_constraint_violation():
    src = H + "let u = uninorm rep(h, 0.3, conjunctive);"
    with pytest.raises(ScriptConstraintViolation) as ei:
        load(src)
    assert ei.value.constraint == "h(e) = 0"
    assert ei.value.span.line == 5


def test_check_names_cover_the_documented_set():
    for name in ("usubnorm", "usubconorm", "usubmonoid", "fsubmonoid", "asubmonoid", "lsubmonoid",
                 "subadditive", "characterize", "axioms", "monoid", "lattice", "indist", "regular",
                 "vaguebinary", "vaguemonoid", "commutative", "hom"):
        assert name in CHECK_NAMES


# running scripts

def test_worked_example_script_lines():
    res = run_source(fixture_text("worked_example.fz"))
    labels = [(ln.label, ln.result.passed) for ln in res.lines]
    assert labels == [("usubnorm-inequality", False), ("identity-condition", False)]
    assert res.lines[0].result.witness == (0.0, 0.0)
    assert not res.ok()


def test_negated_script_passes_inequality():
    res = run_source(fixture_text("worked_example_negated.fz"))
    assert res.lines[0].result.passed and not res.lines[1].result.passed
    assert res.ok() and not res.ok(strict_identity=True)


def test_monoid_and_vague_script():
    src = """
    let M = monoid max(3);
    let E = indist table {[1, 0.2, 0.2, 0.2], [0.2, 1, 0.4, 0.4], [0.2, 0.4, 1, 0.6], [0.2, 0.4, 0.6, 1]} over M;
    let V = vague from(E, M);
    let k = fuzzyset kernel(id, E, 0);
    check monoid(M);
    check indist(min, E);
    check regular(E, M);
    check vaguebinary(min, E, V);
    check vaguemonoid(min, E, V);
    check commutative(min, E, V);
    check hom(id, (V, E), (V, E));
    check asubmonoid(k, min, M);
    """
    res = run_source(src)
    assert res.ok(strict_identity=True), res.render()
    assert any(ln.label == "vaguemonoid-associativity" for ln in res.lines)


def test_lattice_script():
    src = """
    let L = lattice chain(4);
    let M = monoid max(3);
    let s = fuzzyset table {3, 2, 2, 0} over M;
    check lattice(L);
    check lsubmonoid(s, L, M);
    """
    assert run_source(src).ok(strict_identity=True)


def test_monoid_set_with_labels():
    src = """
    let M = monoid set {e, a, b} table {[e, a, b], [a, a, a], [b, b, b]} identity e;
    check monoid(M);
    """
    assert run_source(src).ok()


def test_bad_monoid_table_reports_associativity_or_closure():
    src = "let M = monoid set {0, 1} table {[0, 1], [1, 1]} identity 1;"
    with pytest.raises(DslError):
        load(src)


def test_subadditive_and_axioms_script():
    src = """
    let f = fn(x) sqrt(x);
    let g = fn(x) x^2;
    check subadditive(f) on samples {0, 0.5, 1, 2};
    check subadditive(g) on samples {1};
    check axioms(nullnorm(tconorm lukasiewicz, 0.5, tnorm lukasiewicz)) on grid(11);
    check axioms(uninorm umin(tnorm min, tconorm max, 0.5)) on grid(11);
    """
    res = run_source(src)
    verdicts = [ln.result.passed for ln in res.lines if ln.label == "subadditive"]
    assert verdicts == [True, False]
    assert all(ln.result.passed for ln in res.lines if ln.label.startswith("axioms"))


def test_fsubmonoid_lower_bound_line():
    src = """
    let s = fuzzyset fn(x) 1;
    check fsubmonoid(s, nullnorm(tconorm lukasiewicz, 0.25, tnorm min), tnorm min) on grid(11);
    """
    labels = [ln.label for ln in run_source(src).lines]
    assert labels == ["fsubmonoid-inequality", "identity-condition", "fsubmonoid-lower-bound"]


# expression evaluator against Python arithmetic

def _random_expr(rng, depth):
    if depth == 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.5:
            return "x"
        return repr(round(float(rng.uniform(-3, 3)), 6))
    k = rng.integers(0, 8)
    a = _random_expr(rng, depth - 1)
    b = _random_expr(rng, depth - 1)
    if k < 3:
        return f"({a} {'+-*'[k]} {b})"
    if k == 3:
        return f"({a} / (abs({b}) + 1))"
    if k == 4:
        return f"min({a}, {b})"
    if k == 5:
        return f"max({a}, {b}, x)"
    if k == 6:
        return f"sqrt(abs({a}))"
    return f"(-{a})^2"


def _py(expr):
    return expr.replace("^", "**").replace("sqrt", "math.sqrt")


def test_expression_evaluator_matches_reference():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        expr = _random_expr(rng, 4)
        x = float(rng.uniform(0, 1))
        got = load(f"let f = fn(x) {expr};").definitions["f"](x)
        want = eval(_py(expr), {"math": math, "abs": abs, "min": min, "max": max, "x": x})
        assert got == pytest.approx(want, rel=1e-12, abs=1e-12), expr


@settings(max_examples=100, deadline=None)
@given(st.floats(-100, 100), st.floats(-100, 100))
def test_precedence(a, b):
    f = load(f"let f = fn(x) {a!r} - x * {b!r} + -x;").definitions["f"]
    assert f(0.5) == pytest.approx(a - 0.5 * b - 0.5, abs=1e-9)


def test_multiword_condition_labels():
    src = """
    let M = monoid max(2);
    let E = indist crisp over M;
    check regular(E, M);
    check hom(id, (vague from(E, M), E), (vague from(E, M), E));
    """
    lines = run_source(src).render().splitlines()
    assert lines[:2] == ["PASS regular-right-regular", "PASS regular-left-regular"]
    assert lines[-1] == "PASS hom-identity-preserved"
