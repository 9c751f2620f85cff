"""Result objects returned by every checker."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class ConditionResult:
    """Verdict for one named condition.

    On failure ``witness`` holds the lexicographically smallest failing
    tuple, and ``lhs``/``rhs`` the two evaluated sides at that tuple.
    """

    name: str
    passed: bool
    witness: Optional[tuple] = None
    lhs: Any = None
    rhs: Any = None
    note: str = ""

    def describe(self) -> str:
        if self.passed:
            return f"PASS {self.name}"
        parts = [f"FAIL {self.name}"]
        if self.witness is not None:
            parts.append(f"@ {format_witness(self.witness)}")
        if self.lhs is not None or self.rhs is not None:
            parts.append(f"(lhs={_fmt(self.lhs)}, rhs={_fmt(self.rhs)})")
        if self.note:
            parts.append(self.note)
        return " ".join(parts)


@dataclass
class CheckReport:
    name: str
    conditions: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    verdict = passed

    def __getitem__(self, name) -> ConditionResult:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name) -> bool:
        return any(c.name == name for c in self.conditions)

    @property
    def failed(self) -> list:
        return [c for c in self.conditions if not c.passed]

    @property
    def witness(self):
        for c in self.conditions:
            if not c.passed:
                return c.witness
        return None

    def add(self, cond: ConditionResult) -> ConditionResult:
        self.conditions.append(cond)
        return cond

    def summary(self) -> str:
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'}"]
        lines += ["  " + c.describe() for c in self.conditions]
        return "\n".join(lines)

    def __bool__(self):
        return self.passed


# AxiomReport is the same structure; the alias keeps call sites readable.
AxiomReport = CheckReport


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.12g}"
    return repr(v)


def format_witness(w) -> str:
    if isinstance(w, tuple):
        return "(" + ", ".join(_fmt(float(v)) if isinstance(v, (float, int)) and not isinstance(v, bool) else str(v) for v in w) + ")"
    return str(w)
