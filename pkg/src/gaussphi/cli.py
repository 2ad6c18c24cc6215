"""Command-line front end.

Exit codes: 0 success, 1 computational or verification failure, 2 usage
error (including phi/expand at the origin and invalid region bounds).
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import GaussianInt, I, MINUS_I, MINUS_ONE, ONE, ZERO, \
    UndefinedAtZeroError
from .oracle import expansion_of, phi_oracle
from .phi import phi, preimage_count, preimage_points, sequence
from .regions import Region, RegionBoundsError
from .render import render_decomposition, render_region
from .verify import run_verification

_DIGIT_TOKEN = {ZERO: "0", ONE: "1", MINUS_ONE: "-1", I: "i", MINUS_I: "-i"}


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _cmd_phi(args: argparse.Namespace) -> int:
    if args.x == 0 and args.y == 0:
        print("phi undefined at 0", file=sys.stderr)
        return 2
    z = GaussianInt(args.x, args.y)
    print(phi_oracle(z) if args.use_oracle else phi(z))
    return 0


def _cmd_expand(args: argparse.Namespace) -> int:
    if args.x == 0 and args.y == 0:
        print("no expansion exists at 0", file=sys.stderr)
        return 2
    z = GaussianInt(args.x, args.y)
    tokens = [_DIGIT_TOKEN[d] for d in reversed(expansion_of(z))]
    print(f"{' '.join(tokens)} = {z}")
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    print(preimage_count(args.level))
    return 0


def _cmd_sequence(args: argparse.Namespace) -> int:
    values = sequence(args.n_max)
    if args.b_file:
        for m, value in enumerate(values):
            print(f"{m} {value}")
    else:
        print(", ".join(map(str, values)))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    out = sys.stdout
    if args.format == "csv":
        out.write("x,y,j,phi\n")
        for z, j in preimage_points(args.level):
            if j is None:
                out.write(f"{z.x},{z.y},,\n")
            else:
                out.write(f"{z.x},{z.y},{j},{phi(z)}\n")
    else:
        for z, j in preimage_points(args.level):
            record = {"x": z.x, "y": z.y, "j": j,
                      "phi": None if j is None else phi(z)}
            out.write(json.dumps(record) + "\n")
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    if args.what == "level":
        document = render_decomposition(args.n)
        markers = preimage_count(args.n)
    else:
        region = Region(args.a, args.b)
        document = render_region(region)
        markers = region.count()
    try:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(document)
    except OSError as exc:
        print(f"cannot write {args.output}: {exc}", file=sys.stderr)
        return 1
    print(markers)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(radius=args.radius, max_level=args.max_level,
                              workers=args.threads)
    print(report.format(), end="")
    return 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussphi",
        description="Minimal Euclidean function on the Gaussian integers: "
                    "values, digit expansions, pre-image counts (OEIS "
                    "A006457, indexed so a(0) = 1 counts the empty level "
                    "plus the origin), enumeration, SVG figures and "
                    "exhaustive verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="value of phi at x + yi")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--use-oracle", action="store_true",
                   help="evaluate by exhaustive digit expansion instead")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("expand", help="a shortest base-(1+i) expansion")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("count", help="size of the pre-image of [0, n]")
    p.add_argument("level", type=_nonnegative)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("sequence", help="terms a(0..N) of OEIS A006457")
    p.add_argument("n_max", type=_nonnegative, metavar="N")
    p.add_argument("--b-file", action="store_true",
                   help="one 'index value' pair per line, from index 0")
    p.set_defaults(func=_cmd_sequence)

    p = sub.add_parser("enumerate",
                       help="list the points of the pre-image of [0, n]")
    p.add_argument("level", type=_nonnegative)
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="csv rows or JSON lines (default: csv)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("render", help="write an SVG figure")
    rsub = p.add_subparsers(dest="what", required=True)
    rp = rsub.add_parser("level", help="layered pre-image of [0, n]")
    rp.add_argument("n", type=_nonnegative)
    rp.add_argument("-o", "--output", required=True)
    rp.set_defaults(func=_cmd_render)
    rp = rsub.add_parser("region", help="single region with bounds a, b")
    rp.add_argument("a", type=int)
    rp.add_argument("b", type=int)
    rp.add_argument("-o", "--output", required=True)
    rp.set_defaults(func=_cmd_render)

    p = sub.add_parser("verify",
                       help="run the exhaustive self-check suite")
    p.add_argument("--radius", type=_positive, default=64,
                   help="half-width of the phi-vs-oracle box (default 64)")
    p.add_argument("--max-level", type=_nonnegative, default=10,
                   help="largest pre-image level checked (default 10)")
    p.add_argument("--threads", type=_positive, default=1,
                   help="worker processes for the box sweep (default 1)")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RegionBoundsError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except UndefinedAtZeroError as exc:
        print(str(exc), file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
