"""Tokenizer for .fz scripts."""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import LexError, SourceSpan

KEYWORDS = frozenset({
    "let", "fn", "piecewise", "check", "on", "grid", "samples",
    "tnorm", "tconorm", "uninorm", "nullnorm", "monoid", "lattice", "indist", "fuzzyset", "vague",
})
CTOR_KEYWORDS = ("tnorm", "tconorm", "uninorm", "nullnorm", "monoid", "lattice", "indist", "fuzzyset", "vague")

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>->|[=(){}\[\],;+\-*/^])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # 'kw', 'ident', 'number', 'op', 'eof'
    text: str
    span: SourceSpan

    def is_(self, kind, text=None):
        return self.kind == kind and (text is None or self.text == text)

    def __repr__(self):
        return f"{self.kind}:{self.text!r}@{self.span}"


def tokenize(text: str) -> list:
    """Split ``text`` into tokens, ending with an ``eof`` token.

    Comments and whitespace are dropped.  CRLF line endings are accepted.
    """
    out = []
    pos, line, col = 0, 1, 1
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise LexError(f"unexpected character {text[pos]!r}", SourceSpan(line, col, 1))
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind == "ident" and s in KEYWORDS:
                kind = "kw"
            if kind not in ("ws", "comment"):
                out.append(Token(kind, s, SourceSpan(line, col, len(s))))
            col += len(s)
        pos = m.end()
    out.append(Token("eof", "", SourceSpan(line, col, 1)))
    return out
