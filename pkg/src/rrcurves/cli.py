"""Command-line front end.  Every subcommand prints one JSON report (or text).

Exit codes: 0 success, 1 usage error, 2 domain error, 3 sweep mismatch.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import diagrams
from .errors import DomainError
from .notation import format_word, parse_word
from .oracle import oracle_verdict
from .recognizer import classify
from .sweep import sweep_equivalence
from .words import abelianize, cyclic_reduce, free_reduce

SCHEMA_VERSION = 1

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_form(arg: str) -> diagrams.DiagramForm:
    text = arg
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"not a JSON object or readable file: {exc}") from None
    return diagrams.form_from_dict(data)


def cmd_classify(args):
    w = parse_word(args.word)
    res = classify(w)
    return {"input": args.word, **res.to_dict()}


def cmd_oracle(args):
    w = parse_word(args.word)
    return {"input": args.word, **oracle_verdict(w).to_dict()}


def cmd_reduce(args):
    w = parse_word(args.word)
    reduced = free_reduce(w)
    cyclic = format_word(cyclic_reduce(w).word) if reduced else None
    return {"input": args.word, "reduced": format_word(reduced), "cyclic": cyclic}


def cmd_classify_form(args):
    f = _load_form(args.form)
    out = {"input": f.to_dict(), "class": diagrams.classify_form(f).to_dict()}
    try:
        w = diagrams.realize_word(f)
    except diagrams.NoWordRealization:
        w = None
    out["word"] = None if w is None else format_word(w)
    return out


def cmd_realize(args):
    f = _load_form(args.form)
    w = diagrams.realize_word(f)
    return {"input": f.to_dict(), "word": format_word(w), "abelianization": list(abelianize(w))}


def cmd_fiber_types(args):
    f = _load_form(args.form)
    t1, t2 = diagrams.fiber_types(f)
    return {
        "input": f.to_dict(),
        "fiber_types": [[t1.numerator, t1.denominator], [t2.numerator, t2.denominator]],
    }


def cmd_homology(args):
    d1, d2 = diagrams.homology_check(parse_word(args.alpha), parse_word(args.beta))
    return {"input": [args.alpha, args.beta], "h1": [d1, d2]}


def cmd_sweep(args):
    if args.max_len < 1:
        raise UsageError("--max-len must be >= 1")
    return sweep_equivalence(args.max_len, workers=args.workers)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rrcurves", description=__doc__.splitlines()[0])
    p.add_argument("--output", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn, helptext in (
        ("classify", cmd_classify, "recognize primitive / proper power by descent"),
        ("oracle", cmd_oracle, "Whitehead length minimization verdict"),
        ("reduce", cmd_reduce, "free and cyclic reduction"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("word")
        sp.set_defaults(func=fn)

    for name, fn in (
        ("classify-form", cmd_classify_form),
        ("realize", cmd_realize),
        ("fiber-types", cmd_fiber_types),
    ):
        sp = sub.add_parser(name, help="diagram family given as JSON text or a path")
        sp.add_argument("form", metavar="JSON|path")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("homology", help="H_1 after adding 2-handles along two words")
    sp.add_argument("alpha")
    sp.add_argument("beta")
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("sweep", help="exhaustive recognizer vs oracle check")
    sp.add_argument("--max-len", type=int, default=10)
    sp.add_argument("--mode", choices=("equivalence",), default="equivalence")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)

    for sp in sub.choices.values():
        sp.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)
    return p


def _emit(report: dict, fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=False) + "\n")
        return
    for k, v in report.items():
        if isinstance(v, (dict, list)):
            v = json.dumps(v)
        stream.write(f"{k}: {v}\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: --help or a usage error
        return exc.code
    start = time.perf_counter()
    try:
        body = args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"rrcurves: error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        err = {"schema_version": SCHEMA_VERSION, "command": args.command, **exc.to_dict()}
        _emit(err, args.output, sys.stderr)
        return EXIT_DOMAIN
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        **body,
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }
    _emit(report, args.output, sys.stdout)
    if args.command == "sweep" and report["mismatches"]:
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
