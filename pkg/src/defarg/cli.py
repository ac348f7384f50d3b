"""Command-line front end: ``defarg <subcommand> [theory-file] [options]``.

Exit codes: 0 success (or query holds), 10 query does not hold,
1 parse or usage error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .argumentation import format_term, minimal_contradictions, term_to_json
from .errors import DefargError, InvariantViolation
from .formula import parse_formula
from .oracle import DEFAULT_MAX_DEFAULTS, oracle_report
from .reasoner import classify, credulous, default_terms, extensions_report, skeptical
from .selftest import golden_checks, random_checks
from .theory import parse_theory
from .transform import system_to_json, system_to_text, translate

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT, EXIT_NO = 0, 1, 2, 10


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="defarg", description="Default logic via propositional argumentation systems.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(name: str, help: str):
        p = sub.add_parser(name, help=help)
        p.add_argument("theory", help="theory file ('-' for stdin)")
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    with_file("translate", "print the argumentation theory and its assumptions")
    with_file("mics", "print the minimal contradictions")
    with_file("terms", "print the default terms with a generating sequence each")
    p = with_file("extensions", "classify the theory and list its extensions")
    p.add_argument("--marginal", action="store_true", help="include each extension's marginal")
    p = with_file("query", "credulous or skeptical consequence test")
    p.add_argument("formula")
    p.add_argument("--mode", choices=("credulous", "skeptical"), required=True)
    with_file("check", "classification only")
    p = with_file("oracle", "brute-force extensions (exponential in the number of defaults)")
    p.add_argument("--marginal", action="store_true")
    p.add_argument("--max-defaults", type=int, default=DEFAULT_MAX_DEFAULTS)
    p = sub.add_parser("selftest", help="golden examples plus randomized oracle comparison")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50, help="number of random theories")
    p.add_argument("--max-defaults", type=int, default=5)
    p.add_argument("--json", action="store_true")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(out, data) -> None:
    out.write(json.dumps(data, indent=2, sort_keys=False) + "\n")


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"defarg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _dispatch(args, out)
    except InvariantViolation as exc:
        print(f"defarg: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (DefargError, OSError) as exc:
        print(f"defarg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args, out) -> int:
    if args.command == "selftest":
        return _selftest(args, out)

    dt = parse_theory(_read(args.theory))
    if args.command == "oracle":
        if len(dt.defaults) > args.max_defaults:
            raise DefargError(f"{len(dt.defaults)} defaults exceed --max-defaults {args.max_defaults}")
        report = oracle_report(dt, args.marginal)
        return _print_report(report, args, out)

    system = translate(dt)
    if args.command == "translate":
        if args.json:
            _emit(out, system_to_json(system))
        else:
            out.write(system_to_text(system))
    elif args.command == "mics":
        mics = minimal_contradictions(system)
        if args.json:
            _emit(out, {"mics": [term_to_json(t) for t in mics]})
        else:
            for t in mics:
                out.write(format_term(t) + "\n")
    elif args.command == "terms":
        terms = default_terms(system)
        if args.json:
            _emit(out, {"defaultTerms": [
                {"defaultTerm": sorted(t.anchor), "sequence": list(t.sequence)} for t in terms
            ]})
        else:
            for t in terms:
                out.write(f"{t}  via {' '.join(t.sequence) or '-'}\n")
    elif args.command == "extensions":
        return _print_report(extensions_report(system, args.marginal), args, out)
    elif args.command == "check":
        c = classify(system)
        if args.json:
            _emit(out, {"classification": str(c)})
        else:
            out.write(f"{c}\n")
    elif args.command == "query":
        f = parse_formula(args.formula)
        c = classify(system)
        holds = credulous(system, f) if args.mode == "credulous" else skeptical(system, f)
        warning = None if c.has_extensions else "no extensions"
        if args.json:
            data = {"classification": str(c), "mode": args.mode, "formula": str(f), "holds": holds}
            if warning:
                data["warning"] = warning
            _emit(out, data)
        else:
            if warning:
                out.write(f"warning: {warning} ({c})\n")
            out.write("yes\n" if holds else "no\n")
        return EXIT_OK if holds else EXIT_NO
    return EXIT_OK


def _print_report(report: dict, args, out) -> int:
    if args.json:
        _emit(out, report)
        return EXIT_OK
    out.write(f"classification: {report['classification']}\n")
    for i, e in enumerate(report["extensions"], 1):
        term = "{" + ", ".join(e["defaultTerm"]) + "}"
        defaults = ", ".join(e["generatingDefaults"]) or "-"
        out.write(f"extension {i}: term {term} defaults {defaults}\n")
        if "marginal" in e:
            out.write(f"  marginal: {'; '.join(e['marginal']) or 'true'}\n")
    return EXIT_OK


def _selftest(args, out) -> int:
    checks = golden_checks() + random_checks(args.seed, args.count, args.max_defaults)
    failed = [c for c in checks if not c.ok]
    if args.json:
        _emit(out, {
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
            "failed": len(failed),
        })
    else:
        for c in checks:
            line = f"{'PASS' if c.ok else 'FAIL'}  {c.name}"
            out.write(line + (f"  ({c.detail})" if c.detail else "") + "\n")
        out.write(f"{len(checks) - len(failed)}/{len(checks)} checks passed\n")
    return EXIT_INVARIANT if failed else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
