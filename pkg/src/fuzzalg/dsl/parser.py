"""Recursive-descent parser for .fz scripts.

Grammar (``{}`` repetition, ``[]`` option)::

    program   := { stmt ";" }
    stmt      := "let" ID "=" value | "check" NAME "(" [args] ")" [ "on" domain ]
    value     := fndef | piecewise | ctor | expr
    fndef     := "fn" "(" ID ")" expr
    piecewise := "piecewise" "(" ID ")" "{" { interval "->" expr ";" } "}"
    interval  := ("[" | "(") expr "," expr ("]" | ")")
    ctor      := KIND [ form ] [ "(" [args] ")" | literal | fndef ] { CLAUSE arg }
    arg       := ctor | literal | fndef | expr
    literal   := "{" [ expr {"," expr} ] "}" | "{" row {"," row} "}"
    row       := "[" [ expr {"," expr} ] "]"
    domain    := "grid" "(" NUMBER ")" | "samples" "{" [ expr {"," expr} ] "}"
    expr      := term { ("+" | "-") term }
    term      := unary { ("*" | "/") unary }
    unary     := "-" unary | power
    power     := primary [ "^" unary ]
    primary   := NUMBER | "inf" | ID [ "(" [args] ")" ] | "(" expr { "," expr } ")"
"""
from __future__ import annotations

from ..errors import ParseError, SourceSpan
from . import ast
from .lexer import CTOR_KEYWORDS, Token, tokenize

CLAUSES = {
    "monoid": ("with", "identity", "table"),
    "lattice": ("meet", "join"),
    "indist": ("over",),
    "fuzzyset": ("over",),
}


class Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    # token helpers

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def advance(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def at(self, kind, text=None) -> bool:
        return self.tok.is_(kind, text)

    def at_op(self, text) -> bool:
        return self.tok.is_("op", text)

    def error(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        exp = ", ".join(expected)
        raise ParseError(f"expected {exp} but found {found}", t.span, expected)

    def expect_op(self, text) -> Token:
        if not self.at_op(text):
            self.error([repr(text)])
        return self.advance()

    def expect_kw(self, text) -> Token:
        if not self.at("kw", text):
            self.error([repr(text)])
        return self.advance()

    def expect_ident(self, what="identifier") -> Token:
        if not self.at("ident"):
            self.error([what])
        return self.advance()

    # statements

    def program(self) -> ast.Program:
        start = self.tok.span
        stmts = []
        while not self.at("eof"):
            stmts.append(self.statement())
            self.expect_op(";")
        return ast.Program(start, stmts)

    def statement(self):
        t = self.tok
        if self.at("kw", "let"):
            self.advance()
            name = self.expect_ident()
            self.expect_op("=")
            return ast.Let(t.span, name.text, name.span, self.value())
        if self.at("kw", "check"):
            self.advance()
            if self.tok.kind not in ("ident", "kw"):
                self.error(["check name"])
            name = self.advance()
            self.expect_op("(")
            args = self.args_until(")")
            self.expect_op(")")
            domain = None
            if self.at("kw", "on"):
                self.advance()
                domain = self.domain()
            return ast.Check(t.span, name.text, args, domain)
        self.error(["'let'", "'check'"])

    def value(self):
        if self.at("kw", "fn"):
            return self.fndef()
        if self.at("kw", "piecewise"):
            return self.piecewise()
        if self.tok.kind == "kw" and self.tok.text in CTOR_KEYWORDS:
            return self.ctor()
        return self.expr()

    def fndef(self) -> ast.FnDef:
        t = self.expect_kw("fn")
        self.expect_op("(")
        p = self.expect_ident("parameter name")
        self.expect_op(")")
        return ast.FnDef(t.span, p.text, self.expr())

    def piecewise(self) -> ast.Piecewise:
        t = self.expect_kw("piecewise")
        self.expect_op("(")
        p = self.expect_ident("parameter name")
        self.expect_op(")")
        self.expect_op("{")
        pieces = []
        while not self.at_op("}"):
            if not (self.at_op("[") or self.at_op("(")):
                self.error(["'['", "'('", "'}'"])
            iv = self.interval()
            self.expect_op("->")
            body = self.expr()
            self.expect_op(";")
            pieces.append((iv, body))
        self.expect_op("}")
        return ast.Piecewise(t.span, p.text, pieces)

    def interval(self) -> ast.Interval:
        open_t = self.advance()
        lo = self.expr()
        self.expect_op(",")
        hi = self.expr()
        if not (self.at_op("]") or self.at_op(")")):
            self.error(["']'", "')'"])
        close_t = self.advance()
        span = SourceSpan(open_t.span.line, open_t.span.col,
                          close_t.span.col + 1 - open_t.span.col if close_t.span.line == open_t.span.line else 1)
        return ast.Interval(span, open_t.text, lo, hi, close_t.text)

    def ctor(self) -> ast.Ctor:
        kt = self.advance()
        kind = kt.text
        node = ast.Ctor(kt.span, kind, None)
        if kind == "nullnorm":
            pass
        elif kind == "fuzzyset" and self.at("kw", "fn"):
            node.form = "fn"
            node.literal = self.fndef()
        elif kind == "monoid" and self.at("kw", "grid"):
            node.form = self.advance().text
        elif self.at_op("{"):
            pass
        else:
            node.form = self.expect_ident(f"{kind} form").text
        if node.literal is None:
            if self.at_op("("):
                self.advance()
                node.args = self.args_until(")")
                self.expect_op(")")
            elif self.at_op("{"):
                node.literal = self.literal()
            elif kind == "nullnorm":
                self.error(["'('"])
        words = CLAUSES.get(kind, ())
        while self.at("ident") and self.tok.text in words:
            w = self.advance().text
            node.clauses.append((w, self.arg()))
        return node

    def arg(self):
        if self.tok.kind == "kw" and self.tok.text in CTOR_KEYWORDS:
            return self.ctor()
        if self.at_op("{"):
            return self.literal()
        if self.at("kw", "fn"):
            return self.fndef()
        return self.expr()

    def args_until(self, closer) -> list:
        out = []
        if self.at_op(closer):
            return out
        out.append(self.arg())
        while self.at_op(","):
            self.advance()
            out.append(self.arg())
        if not self.at_op(closer):
            self.error(["','", repr(closer)])
        return out

    def literal(self):
        t = self.expect_op("{")
        if self.at_op("["):
            rows = [self.row()]
            while self.at_op(","):
                self.advance()
                rows.append(self.row())
            self.expect_op("}")
            return ast.TableLit(t.span, rows)
        items = self.args_until("}")
        self.expect_op("}")
        return ast.SetLit(t.span, items)

    def row(self) -> list:
        self.expect_op("[")
        items = self.args_until("]")
        self.expect_op("]")
        return items

    def domain(self):
        t = self.tok
        if self.at("kw", "grid"):
            self.advance()
            self.expect_op("(")
            if not self.at("number"):
                self.error(["integer"])
            n = self.advance()
            self.expect_op(")")
            return ast.GridDomain(t.span, ast.Num(n.span, n.text))
        if self.at("kw", "samples"):
            self.advance()
            self.expect_op("{")
            items = self.args_until("}")
            self.expect_op("}")
            return ast.SamplesDomain(t.span, items)
        self.error(["'grid'", "'samples'"])

    # expressions

    def expr(self):
        left = self.term()
        while self.at_op("+") or self.at_op("-"):
            op = self.advance()
            left = ast.Binary(op.span, op.text, left, self.term())
        return left

    def term(self):
        left = self.unary()
        while self.at_op("*") or self.at_op("/"):
            op = self.advance()
            left = ast.Binary(op.span, op.text, left, self.unary())
        return left

    def unary(self):
        if self.at_op("-"):
            t = self.advance()
            return ast.Unary(t.span, "-", self.unary())
        return self.power()

    def power(self):
        base = self.primary()
        if self.at_op("^"):
            t = self.advance()
            return ast.Binary(t.span, "^", base, self.unary())
        return base

    def primary(self):
        t = self.tok
        if t.kind == "number":
            self.advance()
            return ast.Num(t.span, t.text)
        if t.kind == "ident":
            self.advance()
            if t.text == "inf":
                return ast.Inf(t.span)
            if self.at_op("("):
                self.advance()
                args = self.args_until(")")
                self.expect_op(")")
                return ast.Call(t.span, t.text, args)
            return ast.Name(t.span, t.text)
        if self.at_op("("):
            self.advance()
            first = self.arg()
            if self.at_op(","):
                items = [first]
                while self.at_op(","):
                    self.advance()
                    items.append(self.arg())
                self.expect_op(")")
                return ast.Tuple_(t.span, items)
            self.expect_op(")")
            return ast.Group(t.span, first)
        self.error(["number", "identifier", "'('", "'-'"])


def parse(source) -> ast.Program:
    """Parse source text (or a token list) into a :class:`Program`."""
    tokens = tokenize(source) if isinstance(source, str) else source
    return Parser(tokens).program()
