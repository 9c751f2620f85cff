"""Syntax tree for .fz scripts.

Nodes keep enough surface detail (number lexemes, parentheses, interval
brackets) for the pretty-printer to reproduce the original token stream.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import SourceSpan


@dataclass
class Node:
    span: SourceSpan = field(repr=False, compare=False)


# expressions

@dataclass
class Num(Node):
    lexeme: str

    @property
    def value(self):
        return float(self.lexeme)


@dataclass
class Inf(Node):
    pass


@dataclass
class Name(Node):
    id: str


@dataclass
class Unary(Node):
    op: str
    operand: Node


@dataclass
class Binary(Node):
    op: str
    left: Node
    right: Node


@dataclass
class Call(Node):
    func: str
    args: list


@dataclass
class Group(Node):
    inner: Node


@dataclass
class Tuple_(Node):
    items: list


@dataclass
class SetLit(Node):
    items: list


@dataclass
class TableLit(Node):
    rows: list  # list of lists of expressions


# definitions

@dataclass
class FnDef(Node):
    param: str
    body: Node


@dataclass
class Interval(Node):
    open_bracket: str
    lo: Node
    hi: Node
    close_bracket: str


@dataclass
class Piecewise(Node):
    param: str
    pieces: list  # list of (Interval, expr)


@dataclass
class Ctor(Node):
    """``kind [form] [(args) | literal | fn] {clause arg}``."""

    kind: str
    form: Optional[str]
    args: Optional[list] = None
    literal: Optional[Node] = None
    clauses: list = field(default_factory=list)  # (word, node)


@dataclass
class Let(Node):
    name: str
    name_span: SourceSpan
    value: Node


@dataclass
class GridDomain(Node):
    n: Num


@dataclass
class SamplesDomain(Node):
    items: list


@dataclass
class Check(Node):
    name: str
    args: list
    domain: Optional[Node] = None


@dataclass
class Program(Node):
    statements: list
