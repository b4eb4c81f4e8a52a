"""Command-line front end.

Exit codes: 0 success, 1 domain error or failed verification,
2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import arcs, bezout, farey, set_builder, verify
from .errors import ConsistencyError, DomainError
from .export import PlotConfig, csv_text, required_extent, svg_text

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

log = logging.getLogger("bezout_arcs")

SET_HELP = """\
SVG output uses mathematical orientation (y grows upward). The full set
is drawn with the origin at the centre of the canvas; positive-quadrant
modes (b1, b1-flip, positive) put the origin in the lower-left corner.
With --scale 1:1 one lattice unit is one pixel, so the canvas defaults to
(2p+1)x(2p+1) for the full set and (p+1)x(p+1) otherwise.

Worker processes default to the number of CPUs; set BEZOUT_WORKERS to
cap them."""


def _pt(x: int, y: int) -> str:
    return f"({x}, {y})"


def _num(v: int) -> str:
    return f"({v})" if v < 0 else str(v)


def _checked(pt, p: int, q: int):
    # fail-stop: never print a point that does not satisfy its identity
    if pt.x * q - pt.y * p != pt.index:
        raise ConsistencyError(f"{pt} fails its identity for ({p}, {q})")
    return pt


def _emit(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_bezout(args) -> int:
    i, p, q = args.i, args.p, args.q
    if i not in (-1, 0, 1):
        raise DomainError(f"index must be -1, 0 or 1, got {i}")
    pt = _checked(bezout.bezout(i, p, q), p, q)
    print(_pt(pt.x, pt.y))
    print(f"{_num(pt.x)}*{_num(q)} - {_num(pt.y)}*{_num(p)} = {i}")
    return EXIT_OK


def cmd_theta(args) -> int:
    p, q = args.p, args.q
    t = bezout.theta(p, q)
    print(f"theta_{p}({q}) = {t}")
    if q >= 2:
        pt = _checked(bezout.bezout_plus_via_theta(p, q), p, q)
        print(f"B_1({p}, {q}) = {_pt(pt.x, pt.y)}")
    return EXIT_OK


def cmd_farey(args) -> int:
    seq = farey.farey_sequence(args.n)
    print(", ".join(f"{f.numerator}/{f.denominator}" for f in seq))
    return EXIT_OK


def cmd_arc(args) -> int:
    p, q = args.p, args.q
    spec = arcs.build_arc(p, q)
    lo, hi = spec.n_range()
    if args.n_from is not None:
        lo = max(lo, args.n_from)
    if args.n_to is not None:
        hi = min(hi, args.n_to)
    rows = []
    for n in range(lo, hi + 1):
        pt = _checked(arcs.arc_point(spec, n), p, q + n * spec.d)
        rows.append((n, q + n * spec.d, pt))

    out = []
    if args.format == "csv":
        out.append("n,q_nd,x,y,key")
        out += [f"{n},{qn},{pt.x},{pt.y},{spec.key}" for n, qn, pt in rows]
    else:
        out.append(f"p = {p}, q = {q}, B_1(p, q) = {_pt(spec.a, spec.b)}")
        out.append(f"w = {spec.w}, sqrt(pw) = {spec.root}, (r, s) = {_pt(spec.r, spec.s)}, "
                   f"d = {spec.d}")
        out.append(f"{'n':>6}  {'(p, q+nd)':<20}  B_1(p, q+nd)")
        for n, qn, pt in rows:
            out.append(f"{n:>6}  {_pt(p, qn):<20}  {_pt(pt.x, pt.y)}")
        if spec.d >= p:
            out.append(f"note: d = {spec.d} >= p, so only n = 0 is in range")
    if args.coeffs:
        prefix = "# " if args.format == "csv" else ""
        for name, num in (("a0", spec.a0_num), ("a1", spec.a1_num), ("a2", spec.a2_num)):
            out.append(f"{prefix}{name} = {num}/{p}")
    _emit("\n".join(out) + "\n", args.output)
    return EXIT_OK


def _plot_config(args, p: int, centered: bool) -> PlotConfig:
    if args.scale == "1:1":
        need = required_extent(p, centered)
        width, height = args.width or need, args.height or need
    else:
        width, height = args.width or 800, args.height or 800
    return PlotConfig(width=width, height=height, radius=args.radius,
                      scale=args.scale, axes=args.axes)


def cmd_set(args) -> int:
    p = args.p
    mode = args.mode or ("b1" if args.quadrant_only else "full")
    if args.format == "svg":
        # validate the layout before the (possibly long) build
        config = _plot_config(args, p, mode == "full")
    bset = set_builder.build_bezout_set(p, mode=mode, workers=args.workers)
    if p >= 100_000:
        log.info("built %d points; writing %s", len(bset), args.format)
    if args.format == "csv":
        text = csv_text(bset.points)
    else:
        text = svg_text(bset.points, p, config, centered=(mode == "full"))
    _emit(text, args.output)
    return EXIT_OK


def cmd_stats(args) -> int:
    bset = set_builder.build_bezout_set(args.p, mode=args.mode, workers=args.workers)
    st = set_builder.set_stats(bset, coverage=not args.no_coverage)
    print(f"p = {args.p}, mode = {bset.mode}")
    print(f"cardinality = {st.cardinality}")
    print(f"bbox = {st.bbox}")
    print("quadrants (I, II, III, IV) = {}".format(st.quadrants))
    if st.arc_coverage is not None:
        cov: Fraction = st.arc_coverage
        print(f"arc coverage = {cov.numerator}/{cov.denominator} = {float(cov):.6f}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        rep = verify.run_suite(name, args.bound)
        print(rep.summary())
        for line in rep.failures[: args.max_failures]:
            print(f"  counterexample: {line}")
        ok = ok and rep.ok
    return EXIT_OK if ok else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bezout-arcs",
        description="Bezout transformations, Bezout sets and their quadratic arcs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("bezout", help="compute B_i(p, q)")
    sp.add_argument("i", type=int, help="index: -1, 0 or 1")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.set_defaults(func=cmd_bezout)

    sp = sub.add_parser("theta", help="inverse of q mod p via Euler's theorem")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.set_defaults(func=cmd_theta)

    sp = sub.add_parser("farey", help="print the Farey sequence of order n")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_farey)

    sp = sub.add_parser("arc", help="quadratic arc through B_1(p, q)")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("-f", "--format", choices=("table", "csv"), default="table")
    sp.add_argument("-c", "--coeffs", action="store_true",
                    help="also print the curve coefficients over the common denominator p")
    sp.add_argument("--from", dest="n_from", type=int, help="smallest n to list")
    sp.add_argument("--to", dest="n_to", type=int, help="largest n to list")
    sp.add_argument("-o", "--output", help="output file (default stdout)")
    sp.set_defaults(func=cmd_arc)

    sp = sub.add_parser("set", help="export the Bezout set of p",
                        epilog=SET_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sp.add_argument("p", type=int)
    sp.add_argument("-q", "--quadrant-only", action="store_true",
                    help="only the points B_1(p, q) (same as --mode b1)")
    sp.add_argument("-m", "--mode", choices=set_builder.MODES)
    sp.add_argument("-f", "--format", choices=("csv", "svg"), default="csv")
    sp.add_argument("-o", "--output", help="output file (default stdout)")
    sp.add_argument("-s", "--scale", choices=("fit", "1:1"), default="fit")
    sp.add_argument("--width", type=int)
    sp.add_argument("--height", type=int)
    sp.add_argument("-r", "--radius", type=float, default=0.5)
    sp.add_argument("--axes", action="store_true")
    sp.add_argument("-j", "--workers", type=int, help="worker processes")
    sp.set_defaults(func=cmd_set)

    sp = sub.add_parser("stats", help="summary statistics of the Bezout set of p")
    sp.add_argument("p", type=int)
    sp.add_argument("-m", "--mode", choices=set_builder.MODES, default="full")
    sp.add_argument("--no-coverage", action="store_true", help="skip the arc-coverage count")
    sp.add_argument("-j", "--workers", type=int)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("verify", help="run an exhaustive self-check suite")
    sp.add_argument("suite", choices=[*verify.SUITES, "all"])
    sp.add_argument("-b", "--bound", type=int, help="largest p (or Farey order) checked")
    sp.add_argument("--max-failures", type=int, default=20)
    sp.set_defaults(func=cmd_verify)
    return parser


def _setup_logging(progress: bool):
    # progress and warnings go to stderr so stdout stays machine-readable
    for h in list(log.handlers):
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO if progress else logging.WARNING)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    _setup_logging(args.verbose or getattr(args, "p", 0) >= 100_000)
    try:
        return args.func(args)
    except (DomainError, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        # bad option combinations, e.g. a 1:1 canvas that is too small
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
