"""Command-line front end.

Subcommands: gen, inv, enum, series, classify, verify, family.  Records go
to stdout as json-lines (default), csv or table; json-lines and csv are
byte-stable, table is for humans.  Exit codes: 0 success, 2 argument
error, 3 overflow, 4 not in the lattice class, 5 verification discrepancy.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import gcd

from .classify import DEFAULT_ORACLE_CEILING, ChainReport, classify, verify_chain
from .core import (
    LatticeIndex,
    NotInClassC,
    Triple,
    is_primitive_lattice,
    lattice_from_triple,
    triple_from_lattice,
)
from .series import (
    even_series,
    extended_enumerate_indexed,
    lattice_enumerate_indexed,
    odd_series,
    pythagorean_family,
    platonic_family,
)

FORMAT_ENV = "TRIPLE_LATTICE_FORMAT"
FORMATS = ("json-lines", "csv", "table")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_NOT_IN_C = 4
EXIT_DISCREPANCY = 5


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not a positive integer")
    return value


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit(records, fields, fmt) -> None:
    # records may be a lazy stream; only the table format buffers it.
    if fmt == "json-lines":
        for rec in records:
            print(json.dumps(rec, separators=(",", ":")))
    elif fmt == "csv":
        print(",".join(fields))
        for rec in records:
            print(",".join(_cell(rec[f]) for f in fields))
    else:
        rows = [[_cell(rec[f]) for f in fields] for rec in records]
        widths = [
            max(len(name), *(len(row[i]) for row in rows)) if rows else len(name)
            for i, name in enumerate(fields)
        ]
        print("  ".join(name.ljust(w) for name, w in zip(fields, widths)).rstrip())
        for row in rows:
            print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def _resolve_format(args: argparse.Namespace) -> str:
    fmt = getattr(args, "format", None) or os.environ.get(FORMAT_ENV) or FORMATS[0]
    if fmt not in FORMATS:
        raise ValueError(f"unknown output format {fmt!r}; choose one of {FORMATS}")
    return fmt


def _lattice_record(m: int, n: int, t: Triple, with_sides: bool = False) -> dict:
    rec = {
        "m": m,
        "n": n,
        "a": t.a,
        "b": t.b,
        "c": t.c,
        "primitive": is_primitive_lattice(LatticeIndex(m, n)),
    }
    if with_sides:
        rec["d"] = t.c - t.b
        rec["e"] = t.c - t.a
    return rec


def cmd_gen(args: argparse.Namespace, fmt: str) -> int:
    t = triple_from_lattice(LatticeIndex(args.m, args.n))
    _emit(
        [_lattice_record(args.m, args.n, t, with_sides=True)],
        ("m", "n", "a", "b", "c", "primitive", "d", "e"),
        fmt,
    )
    return EXIT_OK


def cmd_inv(args: argparse.Namespace, fmt: str) -> int:
    try:
        t = Triple(args.a, args.b, args.c)
    except ValueError as exc:
        raise NotInClassC(str(exc)) from None
    idx = lattice_from_triple(t)
    _emit([{"m": idx.m, "n": idx.n}], ("m", "n"), fmt)
    return EXIT_OK


def cmd_enum(args: argparse.Namespace, fmt: str) -> int:
    if args.mode == "lattice":
        records = (
            _lattice_record(idx.m, idx.n, t)
            for idx, t in lattice_enumerate_indexed(args.c_max)
        )
        fields = ("m", "n", "a", "b", "c", "primitive")
    else:
        records = (
            {
                "mu": idx.mu,
                "n": idx.n,
                "a": t.a,
                "b": t.b,
                "c": t.c,
                "primitive": gcd(gcd(t.a, t.b), t.c) == 1,
            }
            for idx, t in extended_enumerate_indexed(args.c_max)
        )
        fields = ("mu", "n", "a", "b", "c", "primitive")
    _emit(records, fields, fmt)
    return EXIT_OK


def cmd_series(args: argparse.Namespace, fmt: str) -> int:
    if args.kind == "odd":
        triples = odd_series(args.index, args.c_max)
        records = [
            _lattice_record(args.index, n, t) for n, t in enumerate(triples, 1)
        ]
    else:
        triples = even_series(args.index, args.c_max)
        records = [
            _lattice_record(m, args.index, t) for m, t in enumerate(triples, 1)
        ]
    _emit(records, ("m", "n", "a", "b", "c", "primitive"), fmt)
    return EXIT_OK


def cmd_family(args: argparse.Namespace, fmt: str) -> int:
    if args.kind == "pythagorean":
        records = [
            _lattice_record(1, n, pythagorean_family(n))
            for n in range(1, args.count + 1)
        ]
    else:
        records = [
            _lattice_record(m, 1, platonic_family(m))
            for m in range(1, args.count + 1)
        ]
    _emit(records, ("m", "n", "a", "b", "c", "primitive"), fmt)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, fmt: str) -> int:
    report = classify(args.a, args.b, args.c)
    if report.triple is not None:
        a, b, c = report.triple.a, report.triple.b, report.triple.c
    else:
        a, b, c = sorted((args.a, args.b, args.c))
    rec = {
        "a": a,
        "b": b,
        "c": c,
        "in_P": report.in_P,
        "in_E": report.in_E,
        "in_C": report.in_C,
        "in_P0": report.in_P0,
        "m": report.lattice.m if report.lattice else None,
        "n": report.lattice.n if report.lattice else None,
        "u": report.euclid.u if report.euclid else None,
        "v": report.euclid.v if report.euclid else None,
        "scale": report.scale,
    }
    _emit(
        [rec],
        ("a", "b", "c", "in_P", "in_E", "in_C", "in_P0", "m", "n", "u", "v", "scale"),
        fmt,
    )
    return EXIT_OK


def _triple_list(t: Triple | None) -> list[int] | None:
    return [t.a, t.b, t.c] if t is not None else None


def _render_verify(report: ChainReport, fmt: str) -> None:
    if fmt == "json-lines":
        rec = {
            "c_max": report.c_max,
            "counts": {
                "P": report.count_P,
                "E": report.count_E,
                "C": report.count_C,
                "P0": report.count_P0,
            },
            "witnesses": {
                "P_not_E": _triple_list(report.witness_P_not_E),
                "E_not_C": _triple_list(report.witness_E_not_C),
                "C_not_P0": _triple_list(report.witness_C_not_P0),
            },
            "discrepancies": list(report.discrepancies),
        }
        print(json.dumps(rec, separators=(",", ":")))
        return
    rows = [
        ("P", report.count_P, report.witness_P_not_E),
        ("E", report.count_E, report.witness_E_not_C),
        ("C", report.count_C, report.witness_C_not_P0),
        ("P0", report.count_P0, None),
    ]
    if fmt == "csv":
        print("set,count,witness_a,witness_b,witness_c")
        for name, count, witness in rows:
            w = (witness.a, witness.b, witness.c) if witness else ("", "", "")
            print(f"{name},{count},{w[0]},{w[1]},{w[2]}")
        print(f"discrepancies,{len(report.discrepancies)},,,")
        return
    gap = {"P": "not in E", "E": "not in C", "C": "not in P0"}
    print(f"chain verification up to c = {report.c_max}")
    for name, count, witness in rows:
        line = f"  {name:<3} {count:>6}"
        if witness is not None:
            line += f"  witness ({witness.a}, {witness.b}, {witness.c}) {gap[name]}"
        print(line)
    print(f"  discrepancies: {len(report.discrepancies)}")
    for item in report.discrepancies:
        print(f"    {item}")


def cmd_verify(args: argparse.Namespace, fmt: str) -> int:
    report = verify_chain(args.c_max, args.oracle_ceiling)
    _render_verify(report, fmt)
    return EXIT_OK if report.ok else EXIT_DISCREPANCY


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format",
        choices=FORMATS,
        default=None,
        help=f"output format (default: ${FORMAT_ENV} or json-lines)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triple-lattice",
        description="Generate, invert, enumerate, classify and verify "
        "Pythagorean triples on the exact (m, n) lattice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="triple at lattice point (m, n)")
    p.add_argument("m", type=_positive_int)
    p.add_argument("n", type=_positive_int)
    _add_format(p)
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("inv", help="lattice point of a triple (a, b, c)")
    p.add_argument("a", type=_positive_int)
    p.add_argument("b", type=_positive_int)
    p.add_argument("c", type=_positive_int)
    _add_format(p)
    p.set_defaults(handler=cmd_inv)

    p = sub.add_parser("enum", help="all triples with hypotenuse up to a bound")
    p.add_argument("--c-max", type=_positive_int, required=True)
    p.add_argument("--mode", choices=("lattice", "extended"), default="lattice")
    _add_format(p)
    p.set_defaults(handler=cmd_enum)

    p = sub.add_parser("series", help="one odd(m) or even(n) series")
    p.add_argument("kind", choices=("odd", "even"))
    p.add_argument("index", type=_positive_int)
    p.add_argument("--c-max", type=_positive_int, required=True)
    _add_format(p)
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("classify", help="membership in the chain P > E > C > P0")
    p.add_argument("a", type=_positive_int)
    p.add_argument("b", type=_positive_int)
    p.add_argument("c", type=_positive_int)
    _add_format(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("verify", help="cross-check the chain against the oracle")
    p.add_argument("--c-max", type=_positive_int, required=True)
    p.add_argument("--oracle-ceiling", type=_positive_int, default=DEFAULT_ORACLE_CEILING)
    _add_format(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("family", help="prefix of the Pythagorean or Platonic family")
    p.add_argument("kind", choices=("pythagorean", "platonic"))
    p.add_argument("--count", type=_positive_int, default=10)
    _add_format(p)
    p.set_defaults(handler=cmd_family)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        fmt = _resolve_format(args)
        return args.handler(args, fmt)
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except NotInClassC as exc:
        print(f"not in class C: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_C
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
