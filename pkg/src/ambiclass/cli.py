"""Command line driver: range sweeps and single-value inspection.

Subcommands:

* verify     - sweep fundamental discriminants, emit one record per
               (discriminant, cycle) as JSON lines or CSV, summary on stderr
* classgroup - class representatives, invariant factors, fixed classes
* hilbert    - Hilbert symbols at one place or all relevant places
* pell       - continued fraction of the fundamental surd, unit norm

Exit codes: 0 success (all records match), 1 usage or I/O error,
2 at least one verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from multiprocessing import Pool

from .chevalley import ChevalleyReport, verify_discriminant
from .normlocal import OO, CycleChoice, CycleVariant, hilbert_symbol, relevant_places
from .pell import surd_expansion
from .quadform import (
    DEFAULT_DISC_BOUND,
    DiscriminantBoundError,
    NotFundamentalError,
    group_structure,
    is_fundamental,
    narrow_class_group,
)

__all__ = ["main"]

# Column order of the verify record schema; None serializes as JSON null
# and as an empty CSV cell.
RECORD_FIELDS = (
    "D",
    "t",
    "cycle",
    "h",
    "lhs",
    "rhs",
    "norm_group_order",
    "unit_index",
    "eps_norm",
    "remark_applicable",
    "remark_holds",
    "match",
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # exit code 1 on bad usage, not argparse's default 2
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="ambiclass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", help="sweep a discriminant range and check both sides"
    )
    p_verify.add_argument("--min", type=int, required=True, dest="min_d")
    p_verify.add_argument("--max", type=int, required=True, dest="max_d")
    p_verify.add_argument(
        "--cycle", choices=("ordinary", "narrow", "both"), default="both"
    )
    p_verify.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p_verify.add_argument("--out", default=None, help="output path (default stdout)")
    p_verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_verify.add_argument(
        "--fail-fast", action="store_true", help="stop at the first mismatch"
    )
    p_verify.add_argument(
        "--bound",
        type=int,
        default=DEFAULT_DISC_BOUND,
        help="largest |D| accepted; raise explicitly to accept longer runtimes",
    )

    p_group = sub.add_parser(
        "classgroup", help="inspect the class group of one discriminant"
    )
    p_group.add_argument("discriminant", type=int)
    p_group.add_argument("--bound", type=int, default=DEFAULT_DISC_BOUND)

    p_hilbert = sub.add_parser(
        "hilbert", help="Hilbert symbol (a, b) at a place, or at all places"
    )
    p_hilbert.add_argument("a", type=int)
    p_hilbert.add_argument("b", type=int)
    p_hilbert.add_argument(
        "place", help="a prime, 'oo' (or 'inf') for the real place, or 'all'"
    )

    p_pell = sub.add_parser(
        "pell", help="surd continued fraction and fundamental unit norm"
    )
    p_pell.add_argument("discriminant", type=int)

    return parser


# ---- verify -----------------------------------------------------------------


def _record(report: ChevalleyReport) -> dict:
    return {
        "D": report.discriminant,
        "t": report.t,
        "cycle": report.cycle.value,
        "h": report.class_number,
        "lhs": report.lhs_ambiguous,
        "rhs": report.rhs_formula,
        "norm_group_order": report.norm_group_order,
        "unit_index": report.unit_index,
        "eps_norm": report.eps_norm,
        "remark_applicable": report.remark_applicable,
        "remark_holds": report.remark_holds,
        "match": report.match,
    }


def _sweep_worker(task: tuple[int, tuple[CycleVariant, ...], int]) -> list[dict]:
    d, variants, bound = task
    reports = verify_discriminant(d, variants, bound=bound)
    # deterministic record order: by D, then cycle name
    return sorted((_record(r) for r in reports), key=lambda rec: rec["cycle"])


class _Writer:
    def __init__(self, stream, fmt: str):
        self._stream = stream
        self._fmt = fmt
        self._csv = None
        if fmt == "csv":
            self._csv = csv.writer(stream, lineterminator="\n")
            self._csv.writerow(RECORD_FIELDS)

    def write(self, record: dict) -> None:
        if self._csv is not None:
            self._csv.writerow(
                "" if record[k] is None else _csv_cell(record[k]) for k in RECORD_FIELDS
            )
        else:
            self._stream.write(json.dumps(record) + "\n")


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _cmd_verify(args) -> int:
    if args.min_d > args.max_d:
        raise _UsageError(f"--min {args.min_d} exceeds --max {args.max_d}")
    if args.jobs < 1:
        raise _UsageError("--jobs must be a positive integer")
    if args.bound < 1:
        raise _UsageError("--bound must be a positive integer")
    if max(abs(args.min_d), abs(args.max_d)) > args.bound:
        raise _UsageError(
            f"range reaches |D| > {args.bound}; pass a larger --bound to accept it"
        )
    variants = {
        "ordinary": (CycleVariant.ORDINARY,),
        "narrow": (CycleVariant.NARROW,),
        "both": (CycleVariant.ORDINARY, CycleVariant.NARROW),
    }[args.cycle]

    fundamentals = [
        d for d in range(args.min_d, args.max_d + 1) if is_fundamental(d)
    ]
    skipped = (args.max_d - args.min_d + 1) - len(fundamentals)
    tasks = [(d, variants, args.bound) for d in fundamentals]

    if args.out is None:
        stream = sys.stdout
        close = False
    else:
        try:
            stream = open(args.out, "w", encoding="utf-8", newline="")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
        close = True

    verified = mismatched = remark_applicable = 0
    try:
        writer = _Writer(stream, args.format)
        stop = False

        def consume(records: list[dict]) -> None:
            nonlocal verified, mismatched, remark_applicable, stop
            for rec in records:
                writer.write(rec)
                if rec["match"]:
                    verified += 1
                else:
                    mismatched += 1
                if rec["remark_applicable"]:
                    remark_applicable += 1
                if rec["match"] is False and args.fail_fast:
                    stop = True

        if args.jobs == 1:
            for task in tasks:
                consume(_sweep_worker(task))
                if stop:
                    break
        else:
            with Pool(processes=args.jobs) as pool:
                for records in pool.imap(_sweep_worker, tasks, chunksize=64):
                    consume(records)
                    if stop:
                        break
    finally:
        if close:
            stream.close()
        else:
            stream.flush()

    print(
        f"verified={verified} mismatched={mismatched} "
        f"skipped={skipped} remark_applicable={remark_applicable}",
        file=sys.stderr,
    )
    return 2 if mismatched else 0


# ---- classgroup --------------------------------------------------------------


def _form_str(form) -> str:
    return f"({form.a}, {form.b}, {form.c})"


def _cmd_classgroup(args) -> int:
    try:
        group = narrow_class_group(args.discriminant, bound=args.bound)
    except (NotFundamentalError, DiscriminantBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    d = group.discriminant.value
    h = len(group)
    print(f"discriminant {d}: {h} classes, t={group.discriminant.t}")
    print(f"structure: {group_structure(group)}")
    print("representatives:")
    for form in group.classes:
        print(f"  {_form_str(form)}")
    narrow = group.cycle_data(CycleChoice.for_discriminant("narrow", d))
    fixed = sorted(narrow.sigma_fixed)
    print(
        f"narrow ambiguous classes ({len(fixed)}): "
        + "  ".join(_form_str(group.classes[i]) for i in fixed)
    )
    if d > 0:
        ordinary = group.cycle_data(CycleChoice.for_discriminant("ordinary", d))
        fixed = sorted(ordinary.sigma_fixed)
        print(
            f"ordinary classes: {ordinary.order}; ambiguous ({len(fixed)}): "
            + "  ".join(_form_str(group.classes[i]) for i in fixed)
        )
    return 0


# ---- hilbert ------------------------------------------------------------------


def _parse_place(text: str):
    low = text.lower()
    if low in ("oo", "inf", "infinity"):
        return OO
    try:
        return int(text)
    except ValueError:
        raise _UsageError(f"place must be a prime, 'oo', or 'all', not {text!r}")


def _place_str(place) -> str:
    return "oo" if place == OO else str(place)


def _cmd_hilbert(args) -> int:
    if args.a == 0 or args.b == 0:
        raise _UsageError("Hilbert symbol arguments must be nonzero")
    if args.place.lower() == "all":
        product = 1
        for place in relevant_places(args.a, args.b):
            value = hilbert_symbol(args.a, args.b, place)
            product *= value
            print(f"({args.a}, {args.b})_{_place_str(place)} = {value:+d}")
        print(f"product = {product:+d}")
        return 0
    place = _parse_place(args.place)
    try:
        value = hilbert_symbol(args.a, args.b, place)
    except ValueError as exc:
        raise _UsageError(str(exc))
    print(f"({args.a}, {args.b})_{_place_str(place)} = {value:+d}")
    return 0


# ---- pell ---------------------------------------------------------------------


def _cmd_pell(args) -> int:
    try:
        exp = surd_expansion(args.discriminant)
    except (NotFundamentalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    norm = -1 if exp.period_length % 2 else 1
    print(
        f"D={exp.discriminant}: preperiod {list(exp.preperiod)}, "
        f"period {list(exp.period)} (length {exp.period_length}), "
        f"fundamental unit norm {norm:+d}"
    )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "classgroup":
            return _cmd_classgroup(args)
        if args.command == "hilbert":
            return _cmd_hilbert(args)
        return _cmd_pell(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    sys.exit(main())
