"""Command line: ``partenum enumerate | count | bench``.

Exit status is 0 on success (an empty enumeration included), 2 on a usage
error and 1 on anything unexpected.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import bench, counting, oracle
from .blockcount import BlockCountSpec
from .enumerators import FORWARD, REVERSE, EnumeratorState, first, iter_partitions
from .rgs import format_blocks, format_digits, to_blocks

FORMATS = ("rgs", "compact", "blocks", "json-lines")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("--blocks needs at least one block count")
    return values


def _k_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    return lo, hi


def _add_spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=_positive, help="set size")
    p.add_argument("--k", type=int, help="block count bound (at most k, or exactly k with --exact)")
    p.add_argument("--exact", action="store_true", help="treat --k as an exact block count")
    p.add_argument("--k-min", type=int, help="smallest admissible block count")
    p.add_argument("--k-max", type=int, help="largest admissible block count")
    p.add_argument("--blocks", type=_int_list, help="comma-separated admissible block counts")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partenum", description="Enumerate set partitions as restricted growth strings.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream partitions, one per line")
    _add_spec_args(p)
    p.add_argument("--reverse", action="store_true", help="reverse lexicographic order")
    p.add_argument("--format", choices=FORMATS, default="rgs")
    p.add_argument("--limit", type=_positive, help="stop after this many lines and print a resume token to stderr")
    p.add_argument("--resume", help="continue after the partition stored in a resume token")
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("count", help="print how many partitions an enumeration would visit")
    _add_spec_args(p)

    p = sub.add_parser("bench", help="time algorithms X and Y and write CSV")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k-range", type=_k_range, required=True, metavar="LO:HI")
    p.add_argument("--repetitions", type=_positive, default=3)
    p.add_argument("--out", default="-", help="CSV path (default stdout)")
    return parser


def spec_from_args(args) -> BlockCountSpec:
    families = [
        args.k is not None,
        args.k_min is not None or args.k_max is not None,
        args.blocks is not None,
    ]
    if sum(families) > 1:
        raise UsageError("use only one of --k, --k-min/--k-max, --blocks")
    if args.exact and args.k is None:
        raise UsageError("--exact needs --k")
    try:
        if args.k is not None:
            return BlockCountSpec.exactly(args.k) if args.exact else BlockCountSpec.at_most(args.k)
        if families[1]:
            kmin = 1 if args.k_min is None else args.k_min
            kmax = args.n if args.k_max is None else args.k_max
            if kmax is None:
                raise UsageError("--k-min without --k-max needs --n")
            return BlockCountSpec.between(kmin, kmax)
        if args.blocks is not None:
            return BlockCountSpec.in_set(args.blocks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return BlockCountSpec.unrestricted()


def _formatter(fmt: str):
    if fmt == "rgs":
        return format_digits
    if fmt == "compact":
        return lambda d: format_digits(d, compact=True)
    if fmt == "blocks":
        return format_blocks
    return lambda d: json.dumps({"rgs": list(d), "blocks": [list(b) for b in to_blocks(d)]})


def _start_state(args) -> EnumeratorState | None:
    """State on the first string to print, or None if there is none."""
    if args.resume:
        try:
            state = EnumeratorState.from_token(args.resume)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        given = [args.k, args.k_min, args.k_max, args.blocks]
        if args.n is not None and args.n != state.n:
            raise UsageError(f"--n {args.n} disagrees with resume token (n={state.n})")
        if any(v is not None for v in given) and spec_from_args(args) != state.spec:
            raise UsageError(f"block-count options disagree with resume token ({state.spec})")
        if args.reverse != (state.direction == REVERSE):
            raise UsageError("--reverse disagrees with resume token")
        return state if state.advance() else None
    if args.n is None:
        raise UsageError("--n is required")
    return first(args.n, spec_from_args(args), REVERSE if args.reverse else FORWARD)


def cmd_enumerate(args, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    state = _start_state(args)
    if state is None:
        return 0
    if args.format == "compact" and state.k_values and state.k_values[-1] > 10:
        raise UsageError("compact format needs every label <= 9; use --format rgs")
    fmt = _formatter(args.format)
    if args.oracle:
        rows = oracle.filter_by_spec(oracle.generate_all(state.n), state.spec)
        if state.direction == REVERSE:
            rows.reverse()
        start = rows.index(state.digits) if state.digits in rows else len(rows)
        source = iter(rows[start:])
    else:
        source = iter_partitions(state)
    emitted = 0
    last = None
    for digits in source:
        out.write(fmt(digits) + "\n")
        out.flush()
        emitted += 1
        last = digits
        if args.limit is not None and emitted == args.limit:
            token = EnumeratorState.from_digits(last, state.spec, state.direction).to_token()
            err.write(token + "\n")
            err.flush()
            break
    return 0


def cmd_count(args, out=None) -> int:
    out = out or sys.stdout
    if args.n is None:
        raise UsageError("--n is required")
    out.write(f"{counting.count(args.n, spec_from_args(args))}\n")
    return 0


def cmd_bench(args, out=None) -> int:
    out = out or sys.stdout
    n = args.n
    lo, hi = args.k_range
    if n < 3:
        raise UsageError("bench needs --n >= 3")
    if lo > hi or lo < 2 or hi > n - 1:
        raise UsageError(f"--k-range must lie within 2:{n - 1}")
    if args.out != "-":
        try:
            out = open(args.out, "w")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    try:
        records = bench.run_comparison(n, range(lo, hi + 1), repetitions=args.repetitions)
        bench.emit_csv(records, out)
    finally:
        if args.out != "-":
            out.close()
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if args.command == "enumerate":
            return cmd_enumerate(args)
        if args.command == "count":
            return cmd_count(args)
        return cmd_bench(args)
    except UsageError as exc:
        parser.error(str(exc))
    except BrokenPipeError:
        return 0
    except Exception as exc:  # noqa: BLE001
        print(f"partenum: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
