"""Command-line front end.

Exit codes: 0 on success, 2 for unknown verbs or malformed input (single-line
diagnostic on stderr), 3 for domain errors such as degenerate configurations
or non-generic loops.  Verification verbs (``hexagon``, ``selftest``) exit 1
when a checked property fails.
"""

from __future__ import annotations

import argparse
import sys

from . import additive, braids, categories, configurations, garside, selftest
from .errors import GeometryError, ParseError


class _SingleLineParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise ParseError(message)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _build_parser() -> _SingleLineParser:
    parser = _SingleLineParser(prog="dewrithe", description=__doc__)
    verbs = parser.add_subparsers(dest="verb", required=True)

    braid = verbs.add_parser("braid", help="braid word operations")
    ops = braid.add_subparsers(dest="op", required=True)
    nf = ops.add_parser("nf", help="Garside normal form of a word")
    nf.add_argument("word")
    eq = ops.add_parser("eq", help="decide whether two words are the same braid")
    eq.add_argument("left")
    eq.add_argument("right")
    wr = ops.add_parser("writhe", help="signed letter count")
    wr.add_argument("word")
    perm = ops.add_parser("perm", help="underlying permutation")
    perm.add_argument("word")
    ten = ops.add_parser("tensor", help="place two words side by side")
    ten.add_argument("left")
    ten.add_argument("right")
    cnm = ops.add_parser("cnm", help="block braiding element on n + m strands")
    cnm.add_argument("n", type=int)
    cnm.add_argument("m", type=int)
    conj = ops.add_parser("conjcheck", help="strand-adding conjugation identity")
    conj.add_argument("word")

    hexagon = verbs.add_parser("hexagon", help="sweep both hexagon diagrams")
    hexagon.add_argument("--max", type=int, default=20, dest="bound")

    disc = verbs.add_parser("disc", help="discriminant of a configuration file")
    disc.add_argument("file")
    anom = verbs.add_parser("anomaly", help="angular anomaly of a configuration file")
    anom.add_argument("file")
    wind = verbs.add_parser("winding", help="discriminant winding of a loop file")
    wind.add_argument("file")
    realize = verbs.add_parser("realize", help="realize a braid word as a loop")
    realize.add_argument("--word", required=True)
    realize.add_argument("--steps", type=int, default=32)
    extract = verbs.add_parser("extract", help="read a braid word off a loop file")
    extract.add_argument("--loop", required=True)
    extract.add_argument("--seed", type=int, default=0)

    compose = verbs.add_parser("compose", help="compose two additive series")
    compose.add_argument("outer")
    compose.add_argument("inner")
    invert = verbs.add_parser("invert", help="compositional inverse of a series")
    invert.add_argument("series")
    coprod = verbs.add_parser("coproduct", help="universal coproduct coefficient")
    coprod.add_argument("--n", type=int, required=True)
    dims = verbs.add_parser("dims", help="graded dimensions of a polynomial algebra")
    dims.add_argument("--max", type=int, required=True, dest="top")
    dims.add_argument(
        "--degrees",
        type=int,
        nargs="*",
        default=None,
        help="generator degrees (default: 2^i - 1 up to the bound)",
    )

    check = verbs.add_parser("selftest", help="run the seeded property sweep")
    check.add_argument("--seed", type=int, default=0)
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.verb == "braid":
        return _dispatch_braid(args)
    if args.verb == "hexagon":
        ok = True
        for p in range(args.bound + 1):
            for q in range(args.bound + 1):
                for r in range(args.bound + 1):
                    first, second = categories.hexagon_check(p, q, r)
                    row_ok = first.commutes and second.commutes
                    ok = ok and row_ok
                    print(
                        f"{p} {q} {r} {first.path_a} {first.path_b} "
                        f"{second.path_a} {second.path_b} {'ok' if row_ok else 'FAIL'}"
                    )
        return 0 if ok else 1
    if args.verb == "disc":
        config = configurations.parse_configuration(_read_text(args.file))
        value = configurations.discriminant(config)
        print(f"{value.real!r} {value.imag!r}")
        return 0
    if args.verb == "anomaly":
        config = configurations.parse_configuration(_read_text(args.file))
        point = configurations.anomaly(config)
        print(f"{point.delta.real!r} {point.delta.imag!r}")
        return 0
    if args.verb == "winding":
        loop = configurations.parse_loop(_read_text(args.file))
        print(configurations.loop_discriminant_winding(loop))
        return 0
    if args.verb == "realize":
        word = braids.parse_braid_word(args.word)
        if args.steps < 8:
            raise ParseError("--steps must be at least 8")
        loop = configurations.braid_word_to_loop(word, args.steps)
        sys.stdout.write(configurations.format_loop(loop))
        return 0
    if args.verb == "extract":
        loop = configurations.parse_loop(_read_text(args.loop))
        word = configurations.loop_to_braid(loop, perturb_seed=args.seed)
        print(braids.format_braid_word(word))
        return 0
    if args.verb == "compose":
        outer = additive.parse_series(args.outer)
        inner = additive.parse_series(args.inner)
        print(additive.format_series(additive.series_compose(outer, inner)))
        return 0
    if args.verb == "invert":
        series = additive.parse_series(args.series)
        print(additive.format_series(additive.series_invert(series)))
        return 0
    if args.verb == "coproduct":
        if args.n < 1:
            raise ParseError("--n must be at least 1")
        print(additive.format_poly(additive.universal_coproduct(args.n)))
        return 0
    if args.verb == "dims":
        if args.top < 0:
            raise ParseError("--max must be non-negative")
        degrees = args.degrees
        if degrees is None:
            degrees = additive.power_generator_degrees(args.top)
        if any(d < 1 for d in degrees):
            raise ParseError("--degrees must be positive")
        for dim in additive.graded_dimensions(degrees, args.top):
            print(dim)
        return 0
    if args.verb == "selftest":
        return 0 if selftest.run_selftest(args.seed) else 1
    raise ParseError(f"unknown verb {args.verb!r}")


def _dispatch_braid(args: argparse.Namespace) -> int:
    if args.op == "nf":
        word = braids.parse_braid_word(args.word)
        print(garside.format_normal_form(garside.normal_form(word)))
        return 0
    if args.op == "eq":
        left = braids.parse_braid_word(args.left)
        right = braids.parse_braid_word(args.right)
        print("equal" if garside.braids_equal(left, right) else "unequal")
        return 0
    if args.op == "writhe":
        print(braids.writhe(braids.parse_braid_word(args.word)))
        return 0
    if args.op == "perm":
        print(braids.underlying_permutation(braids.parse_braid_word(args.word)))
        return 0
    if args.op == "tensor":
        left = braids.parse_braid_word(args.left)
        right = braids.parse_braid_word(args.right)
        print(braids.format_braid_word(braids.tensor(left, right)))
        return 0
    if args.op == "cnm":
        if args.n < 0 or args.m < 0:
            raise ParseError("block sizes must be non-negative")
        print(braids.format_braid_word(braids.braiding_element(args.n, args.m)))
        return 0
    if args.op == "conjcheck":
        word = braids.parse_braid_word(args.word)
        print("true" if garside.dewrithed_conjugation_check(word) else "false")
        return 0
    raise ParseError(f"unknown braid operation {args.op!r}")


def run(argv: list[str]) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
