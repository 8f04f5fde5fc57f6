"""Command-line front end.

Exit status is 0 on success (an inconclusive verification included), 1 when
a verification fails and 2 on usage or input errors.
"""
import argparse
import sys

from . import fuzz, verify
from .mapfile import FormatError, read_map, read_partition
from .markov import covering_graph, excluded_periods, is_markov
from .periodic import NotPeriodicError, circle_periods_set, complete_window, least_period, orbit_of, periods_set, solve_periodic
from .plmap import as_rational, evaluate, format_rational
from .rotation import DEFAULT_DENOMINATOR_BOUND, format_interval, rotation_interval


class UsageError(Exception):
    pass


def _rational(text):
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational: %r" % text) from None


def _fmt_set(values):
    return "{%s}" % ", ".join(str(v) for v in sorted(values))


def _window(F, args):
    if args.window is not None:
        return tuple(args.window)
    try:
        return complete_window(F)
    except ValueError as exc:
        raise UsageError("%s; pass --window a b" % exc) from None


def cmd_eval(args, out):
    F = read_map(args.map)
    out.write(format_rational(evaluate(F, args.x)) + "\n")
    return 0


def cmd_rotation_interval(args, out):
    F = read_map(args.map)
    if F.degree != 1:
        raise UsageError("rotation intervals need degree 1, got %d" % F.degree)
    out.write("rotation_interval = %s\n" % format_interval(rotation_interval(F, args.den_bound)))
    return 0


def cmd_periods(args, out):
    F = read_map(args.map)
    if args.mod1:
        out.write(_fmt_set(circle_periods_set(F, args.max)) + "\n")
        return 0
    out.write(_fmt_set(periods_set(F, args.max, _window(F, args))) + "\n")
    return 0


def cmd_orbits(args, out):
    F = read_map(args.map)
    n = args.period
    sol = solve_periodic(F, n, 0, _window(F, args))
    out.write(sol.report() + "\n")
    seen = set()
    for x in sol.isolated:
        if least_period(F, x, n) != n:
            continue
        orbit = orbit_of(F, x, n)
        if orbit.points not in seen:
            seen.add(orbit.points)
            out.write(str(orbit) + "\n")
    for a, b in sol.segments:
        out.write("segment [%s, %s]\n" % (format_rational(a), format_rational(b)))
    return 0


def cmd_markov(args, out):
    F = read_map(args.map)
    P = read_partition(args.partition)
    G = covering_graph(F, P)
    markov = is_markov(F, P)
    out.write(G.report() + "\n")
    out.write("%d arrows\n" % G.arrow_count())
    out.write("markov: %s\n" % ("yes" if markov else "no"))
    if markov:
        out.write("excluded: %s\n" % ", ".join(map(str, sorted(excluded_periods(G, args.max)))))
    return 0


def _emit(report, args, out):
    out.write(report.to_kv() if args.format == "kv" else report.to_text())
    return 1 if report.overall == verify.FAIL else 0


def cmd_verify(args, out):
    if args.subject == "theorem":
        if args.map is None:
            raise UsageError("verify theorem needs a map file")
        F = read_map(args.map)
        window = tuple(args.window) if args.window else None
        try:
            report = verify.verify_theorem(F, args.max, window)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.subject == "example-neg":
        if args.d is None:
            raise UsageError("verify example-neg needs --d")
        report = verify.verify_example_negative(args.d, args.max or 6)
    else:
        if args.p is None:
            raise UsageError("verify example-zero needs --p")
        report = verify.verify_example_zero(args.p, args.max)
    return _emit(report, args, out)


def cmd_fuzz(args, out):
    status = 0
    for i, (F, cycle) in enumerate(fuzz.fuzz_theorem_maps(args.seed, args.count, args.max_period)):
        report = verify.verify_theorem_d1(F, args.max)
        if report.overall == verify.FAIL:
            status = 1
        out.write("map %d: period %d orbit {%s}: %s\n" % (
            i, len(cycle), ", ".join(format_rational(x) for x in cycle), report.overall))
    return status


def cmd_plot_data(args, out):
    F = read_map(args.map)
    out.write("# graph: x F(x)\n")
    for x, _ in F.anchors:
        out.write("%.12g %.12g\n" % (x, evaluate(F, x)))
    x = args.x0 if args.x0 is not None else F.start
    out.write("# cobweb from %s: x y\n" % format_rational(x))
    out.write("%.12g %.12g\n" % (x, x))
    for _ in range(args.iterates):
        y = evaluate(F, x)
        out.write("%.12g %.12g\n" % (x, y))
        out.write("%.12g %.12g\n" % (y, y))
        x = y
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="circlemaps", description="Exact analysis of piecewise-linear circle map liftings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate F at a rational point")
    p.add_argument("map")
    p.add_argument("x", type=_rational)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("rotation-interval", help="rotation interval of a degree-one map")
    p.add_argument("map")
    p.add_argument("--den-bound", type=int, default=DEFAULT_DENOMINATOR_BOUND)
    p.set_defaults(func=cmd_rotation_interval)

    p = sub.add_parser("periods", help="least periods of true periodic points")
    p.add_argument("map")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--window", nargs=2, type=_rational, metavar=("A", "B"))
    p.add_argument("--mod1", action="store_true", help="periods of the circle map (F^n(x) = x + k)")
    p.set_defaults(func=cmd_periods)

    p = sub.add_parser("orbits", help="orbits of a given least period")
    p.add_argument("map")
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--window", nargs=2, type=_rational, metavar=("A", "B"))
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("markov", help="covering graph of a partition")
    p.add_argument("map")
    p.add_argument("--partition", required=True)
    p.add_argument("--max", type=int, default=10, help="bound for excluded periods")
    p.set_defaults(func=cmd_markov)

    p = sub.add_parser("verify", help="run a verifier")
    p.add_argument("subject", choices=["theorem", "example-neg", "example-zero"])
    p.add_argument("map", nargs="?")
    p.add_argument("--d", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--max", type=int)
    p.add_argument("--window", nargs=2, type=_rational, metavar=("A", "B"))
    p.add_argument("--format", choices=["text", "kv"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="verify the theorem on seeded random maps")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-period", type=int, default=5)
    p.add_argument("--max", type=int, default=10)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("plot-data", help="graph and cobweb columns for plotting")
    p.add_argument("map")
    p.add_argument("--iterates", type=int, default=20)
    p.add_argument("--x0", type=_rational)
    p.set_defaults(func=cmd_plot_data)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, FormatError, NotPeriodicError, OverflowError, OSError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
