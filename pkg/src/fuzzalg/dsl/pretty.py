"""Render a syntax tree back to .fz source.

Output reproduces the token stream of the parsed text (comments and layout
aside): one statement per line, tokens separated by single spaces.
"""
from __future__ import annotations

from . import ast


def pretty(node) -> str:
    if isinstance(node, ast.Program):
        return "".join(" ".join(_stmt(s)) + " ;\n" for s in node.statements)
    return " ".join(_toks(node))


def _stmt(s):
    if isinstance(s, ast.Let):
        return ["let", s.name, "="] + _toks(s.value)
    out = ["check", s.name, "("] + _list(s.args) + [")"]
    if s.domain is not None:
        out += ["on"] + _toks(s.domain)
    return out


def _list(items, sep=","):
    out = []
    for k, it in enumerate(items):
        if k:
            out.append(sep)
        out += _toks(it)
    return out


def _toks(n) -> list:
    if isinstance(n, ast.Num):
        return [n.lexeme]
    if isinstance(n, ast.Inf):
        return ["inf"]
    if isinstance(n, ast.Name):
        return [n.id]
    if isinstance(n, ast.Unary):
        return [n.op] + _toks(n.operand)
    if isinstance(n, ast.Binary):
        return _toks(n.left) + [n.op] + _toks(n.right)
    if isinstance(n, ast.Call):
        return [n.func, "("] + _list(n.args) + [")"]
    if isinstance(n, ast.Group):
        return ["("] + _toks(n.inner) + [")"]
    if isinstance(n, ast.Tuple_):
        return ["("] + _list(n.items) + [")"]
    if isinstance(n, ast.SetLit):
        return ["{"] + _list(n.items) + ["}"]
    if isinstance(n, ast.TableLit):
        out = ["{"]
        for k, row in enumerate(n.rows):
            if k:
                out.append(",")
            out += ["["] + _list(row) + ["]"]
        return out + ["}"]
    if isinstance(n, ast.FnDef):
        return ["fn", "(", n.param, ")"] + _toks(n.body)
    if isinstance(n, ast.Piecewise):
        out = ["piecewise", "(", n.param, ")", "{"]
        for iv, body in n.pieces:
            out += [iv.open_bracket] + _toks(iv.lo) + [","] + _toks(iv.hi) + [iv.close_bracket, "->"]
            out += _toks(body) + [";"]
        return out + ["}"]
    if isinstance(n, ast.Ctor):
        out = [n.kind]
        if n.form is not None and n.form != "fn":
            out.append(n.form)
        if n.args is not None:
            out += ["("] + _list(n.args) + [")"]
        if n.literal is not None:
            out += _toks(n.literal)
        for word, arg in n.clauses:
            out += [word] + _toks(arg)
        return out
    if isinstance(n, ast.GridDomain):
        return ["grid", "(", n.n.lexeme, ")"]
    if isinstance(n, ast.SamplesDomain):
        return ["samples", "{"] + _list(n.items) + ["}"]
    raise TypeError(f"cannot print {type(n).__name__}")
