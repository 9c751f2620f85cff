"""Command-line entry point.

    fuzzalg run SCRIPT [--eps E] [--strict-identity]
    fuzzalg grid OP --n N [--out PATH] [--script SCRIPT]
    fuzzalg paper-suite [--seed S] [--eps E]

Exit status: 0 when every check passes, 1 when some check fails, 2 on usage,
file, parse or elaboration errors.  Reports go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import sys
import time

from .errors import DslError, FuzzAlgError
from .numerics import TolerancePolicy

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _policy(eps):
    return TolerancePolicy() if eps is None else TolerancePolicy(eps_eq=eps, eps_leq=eps)


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        print(f"{path}: {exc.strerror}", file=sys.stderr)
        return None


def cmd_run(args) -> int:
    from .dsl import format_line, load

    text = _read(args.script)
    if text is None:
        return EXIT_USAGE
    pol = _policy(args.eps)
    try:
        prog = load(text, pol)
    except DslError as exc:
        print(f"{args.script}:{exc}", file=sys.stderr)
        return EXIT_USAGE
    failed = 0
    for item in prog.checks:
        t0 = time.perf_counter()
        try:
            lines = item.run()
        except FuzzAlgError as exc:
            print(f"{args.script}:{item.span.line}:{item.span.col}: check {item.name}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        dt = time.perf_counter() - t0
        for ln in lines:
            print(format_line(ln))
            if not ln.result.passed and (args.strict_identity or not ln.soft):
                failed += 1
        print(f"# {item.name}: {dt:.2f}s", file=sys.stderr)
    n = sum(1 for _ in prog.checks)
    print(f"# {n} checks, {failed} failing conditions", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def _resolve_op(name, script):
    from .dsl import load
    from .operators import BinaryOperator
    from .surfaces import BUILTIN_SURFACES

    if script is not None:
        text = _read(script)
        if text is None:
            return None
        prog = load(text)
        op = prog.definitions.get(name)
        if op is not None:
            if not isinstance(op, BinaryOperator):
                raise KeyError(f"{name!r} in {script} is not a binary operator")
            return op
    if name in BUILTIN_SURFACES:
        return BUILTIN_SURFACES[name]()
    known = ", ".join(BUILTIN_SURFACES)
    raise KeyError(f"unknown operator {name!r}; built-ins: {known}")


def cmd_grid(args) -> int:
    from .surfaces import surface_csv

    if args.n < 2:
        print("--n must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        op = _resolve_op(args.op, args.script)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return EXIT_USAGE
    except DslError as exc:
        print(f"{args.script}:{exc}", file=sys.stderr)
        return EXIT_USAGE
    if op is None:
        return EXIT_USAGE
    text = surface_csv(op, args.n)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        print(f"wrote {args.n * args.n} rows to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_suite(args) -> int:
    from .suite import paper_suite

    results = paper_suite(args.seed, _policy(args.eps))
    for r in results:
        print(r.line())
        print(f"# [{r.key}] {r.seconds:.2f}s", file=sys.stderr)
    failed = [r.key for r in results if not r.passed]
    print(f"# {len(results)} criteria, {len(failed)} failing: {' '.join(failed) or '-'}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fuzzalg", description="Check fuzzy and vague monoid properties.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("run", help="run the checks of a .fz script")
    r.add_argument("script")
    r.add_argument("--eps", type=float, default=None, help="tolerance for equality and inequality tests")
    r.add_argument("--strict-identity", action="store_true",
                   help="make identity-condition failures fail the run")
    r.set_defaults(func=cmd_run)

    g = sub.add_parser("grid", help="export an operator surface as CSV")
    g.add_argument("op", help="built-in name (T_M, ..., U_p, U_p2, U_L, F_L) or a name bound in --script")
    g.add_argument("--n", type=int, default=101)
    g.add_argument("--out", default=None, help="output path; stdout when omitted")
    g.add_argument("--script", default=None)
    g.set_defaults(func=cmd_grid)

    s = sub.add_parser("paper-suite", help="run every acceptance criterion")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--eps", type=float, default=None)
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "eps", None) is not None and not args.eps > 0:
        print("--eps must be positive", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
