"""End-to-end verifiers producing deterministic reports.

Every check carries a witness string made of exact values, so a report can be
re-verified by hand with the operations of the other modules.  A theorem that
is only an implication yields ``inconclusive`` (never ``fail``) when its
hypothesis cannot be met.
"""
import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import examples
from .markov import (
    HorseshoeError,
    covering_graph,
    covers,
    excluded_periods,
    find_horseshoe,
    horseshoe_periodic_point,
    is_markov,
    loop_count,
    simple_loops,
)
from .periodic import complete_window, find_large_orbit, orbit_of, periods_set, solve_periodic
from .plmap import format_rational, image, iterate, reflect
from .rotation import DEFAULT_DENOMINATOR_BOUND, format_interval, interval_contains, rotation_interval
from .sharkovskii import is_sharkovskii_tail

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: str = ""


@dataclass
class VerificationReport:
    subject: str
    checks: list = field(default_factory=list)

    def add(self, name, ok, witness=""):
        status = ok if isinstance(ok, str) else (PASS if ok else FAIL)
        self.checks.append(Check(name, status, witness))
        return status == PASS

    @property
    def overall(self):
        statuses = {c.status for c in self.checks}
        if FAIL in statuses:
            return FAIL
        if INCONCLUSIVE in statuses or not statuses:
            return INCONCLUSIVE
        return PASS

    @property
    def passed(self):
        return self.overall == PASS

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_text(self):
        lines = ["subject: %s" % self.subject]
        for c in self.checks:
            line = "[%s] %s" % (c.status, c.name)
            if c.witness:
                line += ": " + c.witness
            lines.append(line)
        lines.append("overall: %s" % self.overall)
        return "\n".join(lines) + "\n"

    def to_kv(self):
        lines = ["subject=%s" % self.subject]
        for c in self.checks:
            key = re.sub(r"[^a-z0-9]+", "_", c.name.lower()).strip("_")
            lines.append("check.%s=%s" % (key, c.status))
            if c.witness:
                lines.append("witness.%s=%s" % (key, c.witness))
        lines.append("overall=%s" % self.overall)
        return "\n".join(lines) + "\n"


def _fmt_set(values):
    return "{%s}" % ", ".join(str(v) for v in sorted(values))


def _fmt_points(values):
    return "{%s}" % ", ".join(format_rational(v) for v in sorted(values))


def _fmt_interval(iv):
    return "[%s, %s]" % (format_rational(iv[0]), format_rational(iv[1]))


def _check_rotation(report, F, n, denominator_bound):
    bounds = rotation_interval(F, denominator_bound)
    target = (Fraction(-1, n), Fraction(1, n))
    return report.add("rotation interval", interval_contains(bounds, *target),
                      "%s contains %s" % (format_interval(bounds), _fmt_interval(target)))


def _check_all_periods(report, F, n_max, window=None):
    periods = periods_set(F, n_max, window)
    missing = set(range(1, n_max + 1)) - periods
    witness = "periods up to %d: %s" % (n_max, _fmt_set(periods))
    if missing:
        witness += " missing %s" % _fmt_set(missing)
    return report.add("all periods", not missing, witness)


def verify_theorem_d1(F, n_max=10, orbit_max=None, denominator_bound=DEFAULT_DENOMINATOR_BOUND):
    """Large orbit of period ``n`` gives rotation interval containing ``[-1/n, 1/n]``."""
    if F.degree != 1:
        raise ValueError("degree must be 1, got %d" % F.degree)
    report = VerificationReport("theorem degree 1")
    orbit = find_large_orbit(F, orbit_max or n_max)
    if orbit is None:
        report.add("large orbit", INCONCLUSIVE, "none of period <= %d" % (orbit_max or n_max))
        return report
    report.add("large orbit", orbit.diameter > 1, str(orbit))
    _check_rotation(report, F, orbit.period, denominator_bound)
    _check_all_periods(report, F, n_max)
    return report


def verify_theorem_dge2(F, n_max=8, window=None, orbit_max=None):
    """Large orbit gives a horseshoe and hence periodic points of every period."""
    if F.degree < 2:
        raise ValueError("degree must be >= 2, got %d" % F.degree)
    if window is None:
        window = complete_window(F)
    report = VerificationReport("theorem degree %d" % F.degree)
    orbit = find_large_orbit(F, orbit_max or n_max, window)
    if orbit is None:
        report.add("large orbit", INCONCLUSIVE, "none of period <= %d in %s" % (
            orbit_max or n_max, _fmt_interval(window)))
        return report
    report.add("large orbit", orbit.diameter > 1, str(orbit))
    try:
        I, J = find_horseshoe(F, orbit)
    except HorseshoeError as exc:
        report.add("horseshoe", False, str(exc))
        return report
    report.add("horseshoe", True, "I = %s, J = %s" % (_fmt_interval(I), _fmt_interval(J)))
    for name, A, B in (("F(I) covers I", I, I), ("F(I) covers J", I, J), ("F(J) covers I", J, I)):
        report.add(name, covers(F, A, B), "F(%s) = %s" % (_fmt_interval(A), _fmt_interval(image(F, *A))))
    found = []
    bad = []
    for length in range(1, n_max + 1):
        x, lp = horseshoe_periodic_point(F, I, J, length)
        (found if lp == length else bad).append((length, x))
    witness = "; ".join("%d: %s" % (n, format_rational(x)) for n, x in found)
    if bad:
        witness += " wrong least period at %s" % _fmt_set(n for n, _ in bad)
    report.add("all periods", not bad, witness)
    return report


def verify_theorem(F, n_max=None, window=None):
    """Dispatch on the degree."""
    if F.degree == 1:
        return verify_theorem_d1(F, n_max or 10)
    if F.degree >= 2:
        return verify_theorem_dge2(F, n_max or 8, window)
    raise ValueError("the theorem concerns degree >= 1, got %d" % F.degree)


def verify_chained_remark(F, orbits, n_max=10, denominator_bound=DEFAULT_DENOMINATOR_BOUND):
    """Orbits with connected hulls spanning more than one unit act like one large orbit."""
    if F.degree != 1:
        raise ValueError("degree must be 1, got %d" % F.degree)
    report = VerificationReport("chained orbits")
    for orbit in orbits:
        if any(iterate(F, x, 1) != y for x, y in zip(orbit.cycle, orbit.cycle[1:] + orbit.cycle[:1])):
            raise ValueError("not a periodic orbit of F: %s" % orbit)
    hulls = sorted((min(o.cycle), max(o.cycle)) for o in orbits)
    reach = hulls[0][1]
    gap = None
    for lo, hi in hulls[1:]:
        if lo > reach:
            gap = (reach, lo)
            break
        reach = max(reach, hi)
    if gap is not None:
        report.add("connected hulls", INCONCLUSIVE, "gap %s" % _fmt_interval(gap))
        return report
    report.add("connected hulls", True, " ".join(_fmt_interval(h) for h in hulls))
    diameter = max(h[1] for h in hulls) - hulls[0][0]
    if not diameter > 1:
        report.add("diameter", INCONCLUSIVE, format_rational(diameter))
        return report
    report.add("diameter", True, "%s > 1" % format_rational(diameter))
    n = sum(o.period for o in orbits)
    _check_rotation(report, F, n, denominator_bound)
    _check_all_periods(report, F, n_max)
    return report


def verify_example_negative(d, n_max=6, window=(-4, 4)):
    """Odd degree ``-d`` lifting whose only periodic points are ``0, +-3/4``."""
    F = examples.example_negative_degree(d)
    report = VerificationReport("example negative degree d=%d" % d)
    report.add("odd", reflect(F) == F, "-F(-x) = F(x) on all merged breakpoints")

    xs, ys = F.table
    vals = [y + x for x, y in zip(xs, ys)]
    zeros = {x for x, v in zip(xs, vals) if v == 0}
    flat = any(a == 0 and b == 0 for a, b in zip(vals, vals[1:]))
    report.add("F(x) + x <= 0 on [0, 1]", max(vals) <= 0 and not flat and zeros == {0, Fraction(3, 4)},
               "max %s, zeros %s" % (format_rational(max(vals)), _fmt_points(zeros)))

    lo, hi = Fraction(window[0]), Fraction(window[1])
    bound = complete_window(F)
    report.add("window complete", lo <= bound[0] and bound[1] <= hi,
               "periodic points lie in %s" % _fmt_interval(bound))

    points = set()
    segments = []
    for n in range(1, n_max + 1):
        sol = solve_periodic(F, n, 0, (lo, hi))
        points.update(sol.isolated)
        segments.extend(sol.segments)
    expected = {Fraction(-3, 4), Fraction(0), Fraction(3, 4)}
    report.add("periodic points", points == expected and not segments,
               "n <= %d: %s%s" % (n_max, _fmt_points(points),
                                  " segments %d" % len(segments) if segments else ""))

    orbit = orbit_of(F, Fraction(3, 4), 2)
    periods = periods_set(F, n_max, (lo, hi))
    report.add("large orbit", orbit.period == 2 and orbit.diameter == Fraction(3, 2), str(orbit))
    report.add("not all periods", 3 not in periods, "periods %s" % _fmt_set(periods))
    return report


def _odd_loops(G, p):
    return [loop for loop in simple_loops(G, p + 2) if len(loop) > 1 and len(loop) % 2]


def _canonical(vertices):
    n = len(vertices)
    return min(tuple(vertices[r:] + vertices[:r]) for r in range(n))


def verify_example_zero(p, N=None, coordinates=None):
    """Degree-zero lifting with a large orbit whose periods miss ``3, 5, ..., p``."""
    F, orbit, P = examples.example_degree_zero(p, coordinates)
    N = max(10, 2 * p + 2) if N is None else N
    report = VerificationReport("example degree zero p=%d" % p)
    x0, z0 = min(orbit.cycle), max(orbit.cycle)
    img = image(F, 0, 1)
    report.add("image", img == (x0, z0), "F(R) = %s" % _fmt_interval(img))
    report.add("large orbit", orbit.period == 2 * p + 2 and orbit.diameter > 1
               and orbit_of(F, x0, 2 * p + 2) == orbit, str(orbit))
    report.add("markov", is_markov(F, P), "%d intervals over %s" % (len(P), _fmt_interval(P.span)))

    G = covering_graph(F, P)
    arrows = set(G.arrows())
    stated = examples.degree_zero_arrows(p)
    witness = "%d arrows" % len(arrows)
    if arrows != stated:
        witness += ", extra %s, missing %s" % (sorted(arrows - stated), sorted(stated - arrows))
    report.add("covering graph", arrows == stated, witness)

    odd = range(3, p + 1, 2)
    counts = {n: loop_count(G, n) for n in odd}
    report.add("no short odd loops", all(c == 0 for c in counts.values()),
               ", ".join("%d: %d" % kv for kv in counts.items()))

    loops = _odd_loops(G, p)
    found = {_canonical(loop.vertices) for loop in loops}
    stated_loops = {_canonical(v) for v in examples.degree_zero_odd_loops(p)}
    report.add("shortest odd loops", len(loops) == 4 and found == stated_loops,
               "%d loops of length %s" % (len(loops), _fmt_set({len(l) for l in loops})))

    excluded = excluded_periods(G, N)
    report.add("excluded periods", set(odd) <= excluded, "excluded: %s" % ", ".join(map(str, sorted(excluded))))

    periods = periods_set(F, N, (x0, z0))
    ok = 1 in periods and not periods & excluded and is_sharkovskii_tail(periods, N)
    if 2 * p + 2 <= N:
        ok = ok and 2 * p + 2 in periods
    report.add("period set", ok, "periods up to %d: %s" % (N, _fmt_set(periods)))
    return report
