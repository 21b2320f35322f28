"""Command-line driver.

Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 search
exhausted, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import IO, Iterator, Sequence

from .dioph import DEFAULT_U_LIMIT
from .errors import DomainError, SearchExhausted
from .pipeline import classify, construct, survey
from .serialize import write_csv, write_json

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_EXHAUSTED, EXIT_IO = 0, 1, 2, 3, 4


@contextmanager
def _sink(path: str | None) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        yield fh


def cmd_classify(args: argparse.Namespace) -> int:
    c = classify(args.p)
    cls, rep = c.cls, c.rep
    lines = [
        f"p: {rep.p}",
        f"field: Q(sqrt{2 * rep.p})",
        f"e: {rep.e}",
        f"f: {rep.f}",
        f"case: {c.case.value}",
        f"h: {cls.h}",
        f"h_plus: {cls.h_plus}",
        f"h2: {cls.h2}",
        f"h2_plus: {cls.h2_plus}",
        f"norm_eps: {cls.norm_eps:+d}",
        f"eps: {cls.eps_x} + {cls.eps_y}*sqrt({2 * rep.p})",
        f"branch: {'e < 0' if rep.e < 0 else 'e > 0'}",
    ]
    with _sink(args.output) as out:
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    report = construct(args.p, args.u_limit).report()
    with _sink(args.output) as out:
        json.dump(report, out, ensure_ascii=False, indent=2)
        out.write("\n")
    if report["octic_generator"] is not None and not report["mod4_square"]:
        print("warning: no unit class makes mu*eps a square mod 4", file=sys.stderr)
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    if args.pmin >= args.pmax:
        raise DomainError(f"need pmin < pmax, got {args.pmin} >= {args.pmax}")
    rows = survey(args.pmin, args.pmax, args.u_limit, args.jobs)
    with _sink(args.output) as out:
        (write_csv if args.format == "csv" else write_json)(rows, out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    from .reference import run_fixtures

    results = run_fixtures()
    failed = 0
    with _sink(args.output) as out:
        for res in results:
            status = "PASS" if res.ok else "FAIL"
            failed += not res.ok
            line = f"{status} {res.name}"
            if not res.ok:
                line += f": {res.detail}"
            if res.note:
                line += f"  [note: {res.note}]"
            out.write(line + "\n")
        out.write(f"{len(results) - failed}/{len(results)} fixtures passed\n")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def cmd_oracle(args: argparse.Namespace) -> int:
    c = classify(args.p, keep_cycles=True)
    cls = c.cls
    payload = {
        "p": cls.p,
        "discriminant": 8 * cls.p,
        "h_plus": cls.h_plus,
        "h": cls.h,
        "h2": cls.h2,
        "h2_plus": cls.h2_plus,
        "norm_eps": cls.norm_eps,
        "eps": [cls.eps_x, cls.eps_y],
        "cycles": [[[q.a, q.b, q.c] for q in cyc] for cyc in cls.cycles],
    }
    with _sink(args.output) as out:
        json.dump(payload, out, indent=2)
        out.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbert2p",
        description="Unramified cyclic quartic and octic extensions of Q(sqrt(2p)), p = 1 mod 8.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(sp: argparse.ArgumentParser) -> argparse.ArgumentParser:
        sp.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")
        return sp

    sp = with_output(sub.add_parser("classify", help="class data and case label for one prime"))
    sp.add_argument("p", type=int)
    sp.set_defaults(func=cmd_classify)

    sp = with_output(sub.add_parser("construct", help="full field report for one prime (JSON)"))
    sp.add_argument("p", type=int)
    sp.add_argument("--u-limit", type=int, default=DEFAULT_U_LIMIT)
    sp.set_defaults(func=cmd_construct)

    sp = with_output(sub.add_parser("survey", help="one row per prime p = 1 mod 8 in [pmin, pmax]"))
    sp.add_argument("pmin", type=int)
    sp.add_argument("pmax", type=int)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--u-limit", type=int, default=DEFAULT_U_LIMIT)
    sp.set_defaults(func=cmd_survey)

    sp = with_output(sub.add_parser("verify-paper", help="regression against the published tables"))
    sp.set_defaults(func=cmd_verify)

    sp = with_output(sub.add_parser("oracle", help="form cycles and unit behind the class numbers"))
    sp.add_argument("p", type=int)
    sp.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except SearchExhausted as err:
        print(f"search exhausted: {err}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except OSError as err:
        print(f"I/O error: {err}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
