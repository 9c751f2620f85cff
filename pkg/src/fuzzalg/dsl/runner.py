"""Execute elaborated scripts and format their result lines."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..numerics import DEFAULT_POLICY, TolerancePolicy
from .elaborate import load


@dataclass
class RunResult:
    lines: list = field(default_factory=list)  # ResultLine, in script order

    def failed(self, strict_identity: bool = False) -> list:
        return [ln for ln in self.lines if not ln.result.passed and (strict_identity or not ln.soft)]

    def ok(self, strict_identity: bool = False) -> bool:
        return not self.failed(strict_identity)

    def render(self) -> str:
        return "\n".join(format_line(ln) for ln in self.lines)


def format_line(ln) -> str:
    text = ln.result.describe()
    verdict, _, rest = text.partition(" ")
    tail = rest[len(ln.result.name):].lstrip() if rest.startswith(ln.result.name) else rest.partition(" ")[2]
    out = f"{verdict} {ln.label}"
    return f"{out} {tail}" if tail else out


def run_source(text: str, pol: TolerancePolicy = DEFAULT_POLICY) -> RunResult:
    """Parse, elaborate and run every check of a script."""
    prog = load(text, pol)
    res = RunResult()
    for item in prog.checks:
        res.lines.extend(item.run())
    return res
