"""Command-line entry point: `braidtk <command> ...`."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .braid import closure_summary, format_braid, parse_braid
from .certify import (
    DEFAULT_DEPTH,
    DEFAULT_STATES,
    Budget,
    canonical_json,
    certify,
    enumerate_and_classify,
    family_words,
    to_tsv,
    verify_certificate,
)
from .divides import cycle_correspondence, divide_to_braid, parse_divide, validate_divide
from .errors import BraidSyntaxError, BraidtkError, DivideError, LetterRangeError
from .linking import dynkin_type, linking_graph, to_dot
from .seifert import arf_of_word

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2


def _number(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return v


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------- commands

def analyze_report(text: str) -> dict:
    w = parse_braid(text)
    s = closure_summary(w)
    g = linking_graph(w)
    out = {
        "word": format_braid(w),
        "strands": s.strands,
        "crossings": s.crossings,
        "components": s.components,
        "betti": s.betti,
        "genus": _number(s.genus),
        "split": s.split,
        "prime": s.prime,
        "bricks": len(g),
        "edges": len(g.edges),
        "dynkin": dynkin_type(g),
    }
    if s.components == 1 and not s.split:
        out["arf"] = arf_of_word(w)
    return out


def cmd_analyze(args) -> int:
    _emit(_json(analyze_report(args.word)), args.output)
    return EXIT_OK


def cmd_graph(args) -> int:
    g = linking_graph(parse_braid(args.word))
    if args.format == "json":
        obj = {
            "vertices": [[b.column, b.top, b.bottom] for b in g.vertices],
            "edges": [[u, v, kind] for u, v, kind in g.edges],
            "dynkin": dynkin_type(g),
        }
        _emit(_json(obj), args.output)
    else:
        _emit(to_dot(g), args.output)
    return EXIT_OK


def cmd_certify(args) -> int:
    w = parse_braid(args.word)
    budget = Budget(depth=args.budget_depth, states=args.budget_states)
    out = certify(w, budget, knots_only=not args.links)
    report = out.to_json()
    report.pop("certificate", None)
    report["word"] = format_braid(w)
    if out.certificate is not None:
        text = canonical_json(out.certificate) + "\n"
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
            report["certificate_file"] = args.output
        else:
            report["certificate"] = out.certificate
    sys.stdout.write(_json(report))
    return out.exit_code


def cmd_verify(args) -> int:
    w = parse_braid(args.word)
    raw = Path(args.certificate).read_bytes().rstrip(b"\n")
    result = verify_certificate(w, raw)
    sys.stdout.write(_json({"valid": result.ok, "reason": result.reason}))
    return EXIT_OK if result.ok else EXIT_ERROR


def cmd_divide(args) -> int:
    text = sys.stdin.read() if args.path == "-" else Path(args.path).read_text(encoding="utf-8")
    d = parse_divide(text)
    counts = validate_divide(d)
    out = {"divide": str(d), "counts": counts.to_json()}
    try:
        w = divide_to_braid(d)
    except DivideError as exc:
        out["error"] = {"kind": exc.kind, "message": str(exc)}
    else:
        s = closure_summary(w)
        out["word"] = format_braid(w)
        out["closure"] = {"components": s.components, "betti": s.betti, "genus": _number(s.genus)}
        out["cycles"] = cycle_correspondence(d)
    _emit(_json(out), args.output)
    return EXIT_OK if "error" not in out else EXIT_ERROR


def cmd_enumerate(args) -> int:
    items = family_words(args.family)
    budget = Budget(depth=args.budget_depth, states=args.budget_states)
    rows = enumerate_and_classify(items, budget, jobs=args.jobs)
    _emit(to_tsv(rows), args.output)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidtk", description="Positive braid linking graphs and monodromy certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write the result to this file instead of stdout")

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget-states", type=_positive, default=DEFAULT_STATES, help="maximum search states")
    budget.add_argument("--budget-depth", type=_nonnegative, default=DEFAULT_DEPTH, help="maximum braid relations on a search path")

    p = sub.add_parser("analyze", parents=[common], help="closure invariants, linking graph shape and Arf invariant")
    p.add_argument("word")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", parents=[common], help="linking graph as DOT or JSON")
    p.add_argument("word")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("certify", parents=[common, budget], help="search for an assemblage certificate")
    p.add_argument("word")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--links", action="store_true", help="allow multi-component closures")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="re-check a certificate file against a word")
    p.add_argument("word")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("divide", parents=[common], help="convert an ordered Morse divide ('-' reads stdin)")
    p.add_argument("path")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser("enumerate", parents=[common, budget], help="classify a word family as TSV")
    p.add_argument("family", help="3braids:10,12,14 | words:C,N | lemma:E | beta:LO-HI")
    p.add_argument("--format", choices=["tsv"], default="tsv")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BraidSyntaxError, LetterRangeError) as exc:
        print(f"braidtk: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DivideError as exc:
        print(f"braidtk: divide error ({exc.kind}): {exc}", file=sys.stderr)
        return EXIT_PARSE if exc.kind == "malformed" else EXIT_ERROR
    except (BraidtkError, ValueError, OSError) as exc:
        print(f"braidtk: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
