"""Command line entry point ``hgs``.

    hgs enumerate --degree 8 --format md
    hgs enumerate --degree 8 --group 8T3 --format json
    hgs verify --degree 8
    hgs example
    hgs byott --degree 6
    hgs predict --degree 10

Exit status: 0 on success, 1 when a comparison finds a difference,
2 on bad input (unknown group, unreadable database, unsupported degree).
"""

from __future__ import annotations

import argparse
import sys

from . import closedform, example, reports
from .byott import count
from .enumeration import step1_enumerate
from .grouplib import catalogue
from .tgdb import ENV_VAR, ParseError, ValidationError, entries_of_degree

EXIT_OK, EXIT_DIFF, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _degree(text: str) -> int:
    g = int(text)
    if not 2 <= g <= 11:
        raise argparse.ArgumentTypeError("degree must be in 2..11")
    return g


def _entries(args):
    entries = entries_of_degree(args.degree, args.tgdb)
    if getattr(args, "group", None):
        entries = [e for e in entries if e.label == args.group.upper()]
        if not entries:
            raise InputError(f"no group {args.group} of degree {args.degree}")
    return entries


def cmd_enumerate(args) -> int:
    try:
        reps, summary = reports.run_degree(args.degree, args.tgdb, args.jobs, args.group)
    except KeyError:
        raise InputError(f"no group {args.group} of degree {args.degree}") from None
    if args.group:
        summary = None
    sys.stdout.write(reports.render(reps, args.format, summary).decode("utf-8"))
    return EXIT_OK


def cmd_verify(args) -> int:
    reps, summary = reports.run_degree(args.degree, args.tgdb, args.jobs)
    diffs = reports.verify_published(args.degree, reports.build_model(reps, summary))
    for d in diffs:
        print("DIFF", d)
    print(f"degree {args.degree}: {'FAIL' if diffs else 'PASS'} ({len(diffs)} differences)")
    return EXIT_DIFF if diffs else EXIT_OK


def cmd_example(args) -> int:
    labels, members = example.build(args.tgdb)
    sys.stdout.write(example.render(labels, members, one_based=not args.zero_based))
    return EXIT_OK


def cmd_byott(args) -> int:
    bad = 0
    print("group  type    b  |Aut(G,G')|  |Aut(N)|    a  direct  status")
    for e in _entries(args):
        for T in catalogue(args.degree):
            c = count(T, e)
            direct = len(step1_enumerate(e, T))
            if not (c.a or direct):
                continue
            ok = c.a == direct
            bad += not ok
            aut = "-" if c.aut_G_Gprime is None else c.aut_G_Gprime
            print(f"{e.label:6} {T.name:6} {c.b:3} {aut:>11} {c.aut_N:9} {c.a:4} {direct:7}  {'ok' if ok else 'MISMATCH'}")
    print(f"degree {args.degree}: {'FAIL' if bad else 'PASS'} ({bad} mismatches)")
    return EXIT_DIFF if bad else EXIT_OK


def cmd_predict(args) -> int:
    from .enumeration import enumerate_all

    try:
        closedform.degree_kind(args.degree)
    except closedform.UnsupportedDegree as exc:
        raise InputError(str(exc)) from None
    bad = 0
    print("group  family            m  predicted            enumerated")
    for e in _entries(args):
        shape = closedform.classify_shape(e)
        pred = closedform.predict(e, iff=not args.no_iff)
        got = {k: v.total for k, v in enumerate_all(e).per_type_summary().items()}
        ok = all(v is None or v == got[k] for k, v in pred.items())
        bad += not ok
        m = "-" if shape.m is None else shape.m
        p_txt = " ".join(f"{k}={'?' if v is None else v}" for k, v in pred.items())
        g_txt = " ".join(f"{k}={v}" for k, v in got.items())
        print(f"{e.label:6} {shape.family:16} {m:>2}  {p_txt:20} {g_txt}{'' if ok else '  MISMATCH'}")
    print(f"degree {args.degree}: {'FAIL' if bad else 'PASS'} ({bad} mismatches)")
    return EXIT_DIFF if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hgs", description="Hopf Galois structures on separable extensions of degree 2..11.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tgdb", help=f"transitive groups database file (default: ${ENV_VAR} or the bundled one)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="all structures for one degree")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--group", help="restrict to one group, e.g. 8T3")
    p.add_argument("--format", choices=["md", "markdown", "csv", "json"], default="md")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="compare with the published tables")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example", parents=[common], help="the C2^3 example with its class of six D4 structures")
    p.add_argument("--section6", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("--zero-based", action="store_true", help="print points as 0..7")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("byott", parents=[common], help="holomorph counts against direct enumeration")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--group")
    p.set_defaults(func=cmd_byott)

    p = sub.add_parser("predict", parents=[common], help="closed-form counts against direct enumeration")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--group")
    p.add_argument("--no-iff", action="store_true", help="no prediction for unrecognized groups")
    p.set_defaults(func=cmd_predict)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ParseError, ValidationError, OSError) as exc:
        print(f"hgs: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
