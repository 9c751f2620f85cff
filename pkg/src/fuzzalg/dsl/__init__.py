"""A small language for defining operators and fuzzy sets and checking them."""
from .elaborate import CHECK_NAMES, CheckedProgram, elaborate, load
from .lexer import tokenize
from .parser import parse
from .pretty import pretty
from .runner import RunResult, format_line, run_source

__all__ = ["CHECK_NAMES", "CheckedProgram", "RunResult", "elaborate", "format_line", "load", "parse",
           "pretty", "run_source", "tokenize"]
