"""Command line interface: ``classify``, ``sweep`` and ``pell`` subcommands."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .classify import ClassificationError, ClassifyOptions, batch_sweep, classify
from .lattice import LatticeError, Surface
from .pell import NegPellStatus, PellError, solve_neg_pell, solve_pos_pell
from .report import FORMATS, SCHEMA_VERSION, render, render_sweep


def read_flop_profiles(path: Path) -> tuple[tuple[int, int], ...]:
    """Parse lines ``p k`` (``<w,w> = 2p``, ``<w,v_n> = k``); ``#`` starts a comment."""
    profiles = []
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected two integers 'p k', got {raw!r}")
        try:
            profiles.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: not integers: {raw!r}") from None
    return tuple(profiles)


def _int_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B with integers, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _options(args) -> ClassifyOptions:
    profiles = read_flop_profiles(args.flop_profiles) if args.flop_profiles else ()
    return ClassifyOptions(
        scan_bound=args.scan_bound,
        positivity_bound=args.positivity_bound,
        aux_bound=args.aux_bound,
        flop_profiles=profiles,
        flop_search_bound=args.scan_bound,
        workers=args.workers,
    )


def _add_common(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--scan-bound", type=_positive, default=100,
                     help="box size |r|, |m|, |s| <= B for the wall scan")
    cmd.add_argument("--positivity-bound", type=_positive, default=200)
    cmd.add_argument("--aux-bound", type=_positive, default=10_000)
    cmd.add_argument("--flop-profiles", type=Path, default=None,
                     help="file of 'p k' lines to test with the flopping obstruction")
    cmd.add_argument("--format", choices=FORMATS, default="text")
    cmd.add_argument("--workers", type=_positive, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbinv",
        description="Derived-natural involutions of Hilbert schemes of points on generic K3 surfaces.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("classify", help="classify a single (degree, n)")
    cmd.add_argument("--degree", type=int, required=True, help="degree 2t of the K3 surface")
    cmd.add_argument("--points", type=int, required=True, help="number of points n >= 2")
    _add_common(cmd)

    cmd = sub.add_parser("sweep", help="classify a grid of degrees and point counts")
    cmd.add_argument("--degree-range", type=_int_range, required=True,
                     help="inclusive range of even degrees A:B")
    cmd.add_argument("--points-range", type=_int_range, required=True,
                     help="inclusive range of point counts C:D")
    _add_common(cmd)

    cmd = sub.add_parser("pell", help="fundamental solutions of X^2 - D Y^2 = -1 and +1")
    cmd.add_argument("--d", type=_positive, required=True)
    cmd.add_argument("--format", choices=FORMATS, default="text")
    return parser


def _pell_command(D: int, fmt: str) -> str:
    neg = solve_neg_pell(D)
    pos = None if neg is NegPellStatus.SQUARE else solve_pos_pell(D)
    if fmt == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "kind": "pell",
            "D": str(D),
            "negative": neg.value if isinstance(neg, NegPellStatus)
            else {"a": str(neg.a), "b": str(neg.b)},
            "positive": None if pos is None else {"a": str(pos.a), "b": str(pos.b)},
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    lines = []
    if isinstance(neg, NegPellStatus):
        lines.append(f"X^2 - {D} Y^2 = -1: {neg.value}")
    else:
        lines.append(f"X^2 - {D} Y^2 = -1: (X, Y) = ({neg.a}, {neg.b})")
    if pos is not None:
        lines.append(f"X^2 - {D} Y^2 = 1: (X, Y) = ({pos.a}, {pos.b})")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    out = sys.stdout.buffer

    if args.command == "pell":
        out.write(_pell_command(args.d, args.format).encode("utf-8"))
        return 0

    try:
        options = _options(args)
    except (OSError, ValueError) as exc:
        parser.error(str(exc))

    if args.command == "classify":
        try:
            t = Surface.from_degree(args.degree).t
        except LatticeError as exc:
            parser.error(str(exc))
        if args.points < 2:
            parser.error(f"--points must be at least 2, got {args.points}")
        try:
            report = classify(t, args.points, options)
        except ClassificationError as exc:
            print(f"internal inconsistency: {exc}", file=sys.stderr)
            return 1
        except ValueError as exc:
            # e.g. a configured flop profile the obstruction cannot handle
            parser.error(str(exc))
        out.write(render(report, args.format))
        return 0

    lo, hi = args.degree_range
    if lo < 2 or lo % 2 or hi % 2:
        parser.error(f"--degree-range needs positive even endpoints, got {lo}:{hi}")
    c, d = args.points_range
    if c < 2:
        parser.error(f"--points-range must start at 2 or more, got {c}")
    result = batch_sweep(range(lo // 2, hi // 2 + 1), range(c, d + 1), options,
                         workers=args.workers)
    out.write(render_sweep(result, args.format))
    return 1 if result.errors else 0


if __name__ == "__main__":
    sys.exit(main())
