"""Exact solutions of ``F^n(x) = x + k``, orbits, periods and diameters."""
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from . import _backend
from .plmap import DEFAULT_PIECE_CAP, as_rational, evaluate, format_rational, image, iterate


class NotPeriodicError(ValueError):
    """The point did not return within the allowed number of steps."""


@dataclass(frozen=True)
class PeriodicSolutions:
    """All solutions of ``F^n(x) = x + k`` in a window.

    ``isolated`` are single points; ``segments`` are closed intervals on which
    ``F^n(x) - x - k`` vanishes identically.  Both lists are sorted and
    pairwise disjoint.
    """

    n: int
    k: int
    isolated: list = field(default_factory=list)
    segments: list = field(default_factory=list)

    def count(self):
        return len(self.isolated) + len(self.segments)

    def report(self):
        return "period %d: %d isolated, %d segments" % (
            self.n, len(self.isolated), len(self.segments))


@dataclass(frozen=True)
class Orbit:
    """A true periodic orbit; ``cycle`` lists the points in dynamical order."""

    cycle: tuple

    @property
    def points(self):
        return tuple(sorted(self.cycle))

    @property
    def period(self):
        return len(self.cycle)

    @property
    def diameter(self):
        return max(self.cycle) - min(self.cycle)

    def __contains__(self, x):
        return x in self.cycle

    def __str__(self):
        pts = ", ".join(format_rational(x) for x in self.points)
        return "{%s} period %d diameter %s" % (pts, self.period, format_rational(self.diameter))


def _window(F, window):
    """Resolve a window to ``(lo, hi, half_open)``.

    Degree-one solutions are invariant under integer translation, so the
    fundamental domain ``[0, 1)`` is the default.  Every other degree needs
    an explicit window.
    """
    if window is None:
        if F.degree != 1:
            raise ValueError("an explicit window is required for degree %d" % F.degree)
        return Fraction(0), Fraction(1), True
    lo, hi = as_rational(window[0]), as_rational(window[1])
    if lo > hi:
        raise ValueError("empty window")
    return lo, hi, False


def raw_solutions(F, n, k=0, window=None):
    """Lazily yield ``(lo, hi)`` solution pieces in increasing order.

    Adjacent pieces may touch or repeat a point; :func:`solve_periodic`
    merges them.  Points at the right end of a half-open window are skipped.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lo, hi, half_open = _window(F, window)
    kern = _backend.kernel
    for a, b in kern.walk([F.kernel_table()] * n, lo, hi, shift=int(k), solve=True):
        if half_open and a == hi:
            continue
        yield a, b


def solve_periodic(F, n, k=0, window=None, cap=DEFAULT_PIECE_CAP):
    """All solutions of ``F^n(x) = x + k`` in ``window``.

    Each linearity piece ``a*x + b`` of ``F^n`` gives the root of
    ``a*x + b = x + k``, the whole piece when ``a == 1`` and ``b == k``, or
    nothing.
    """
    isolated = []
    segments = []
    for a, b in raw_solutions(F, n, k, window):
        if a == b:
            if isolated and isolated[-1] == a:
                continue
            if segments and segments[-1][0] <= a <= segments[-1][1]:
                continue
            isolated.append(a)
        else:
            if segments and segments[-1][1] >= a:
                segments[-1] = (segments[-1][0], max(b, segments[-1][1]))
            else:
                segments.append((a, b))
            while isolated and a <= isolated[-1] <= b:
                isolated.pop()
        if len(isolated) + len(segments) > cap:
            raise OverflowError("more than %d solutions" % cap)
    return PeriodicSolutions(n, int(k), isolated, segments)


def divisors(n):
    return [i for i in range(1, n + 1) if n % i == 0]


def least_period(F, x, n):
    """Least ``i`` dividing ``n`` with ``F^i(x) = x``; assumes ``F^n(x) = x``."""
    orbit = [as_rational(x)]
    for _ in range(n):
        orbit.append(evaluate(F, orbit[-1]))
    if orbit[n] != orbit[0]:
        raise NotPeriodicError("F^%d(x) != x" % n)
    for i in divisors(n):
        if orbit[i] == orbit[0]:
            return i
    return n


def _mod1_period(F, x, n):
    """Least ``i`` dividing ``n`` with ``F^i(x) - x`` an integer."""
    y = x
    for i in range(1, n + 1):
        y = evaluate(F, y)
        if n % i == 0 and (y - x).denominator == 1:
            return i
    raise NotPeriodicError("F^%d(x) - x is not an integer" % n)


def _shift_range(F, n, lo, hi):
    """Integers ``k`` for which ``F^n(x) = x + k`` can hold on ``[lo, hi]``."""
    table = F.kernel_table()
    ylo, yhi = lo, hi
    for _ in range(n):
        ylo, yhi = table.image(ylo, yhi)
    return range(floor(ylo - hi), ceil(yhi - lo) + 1)


def segment_witness(F, lo, hi, n, mod1=False):
    """A point of ``[lo, hi]`` with least period exactly ``n``, or ``None``.

    ``F^n`` is the identity (plus a constant) on the segment; the solution
    sets of ``F^i(x) = x + k`` for the proper divisors ``i`` (only ``k = 0``
    unless ``mod1``) are solved exactly and a point outside all of them is
    returned.
    """
    covered = []
    points = set()
    for i in divisors(n)[:-1]:
        for k in (_shift_range(F, i, lo, hi) if mod1 else (0,)):
            sol = solve_periodic(F, i, k, (lo, hi))
            covered.extend(sol.segments)
            points.update(sol.isolated)
    covered.sort()
    gaps = []
    cursor = lo
    for a, b in covered:
        if a > cursor:
            gaps.append((cursor, a))
        cursor = max(cursor, b)
    if cursor < hi:
        gaps.append((cursor, hi))
    for a, b in gaps:
        x = (a + b) / 2
        step = (b - a) / 4
        while x in points:
            x = a + step
            step /= 2
        return x
    return None


def periodic_witness(F, n, window=None):
    """A point of least period exactly ``n`` in the window, or ``None``."""
    for a, b in raw_solutions(F, n, 0, window):
        if a == b:
            if least_period(F, a, n) == n:
                return a
        else:
            w = segment_witness(F, a, b, n)
            if w is not None:
                return w
    return None


def periods_set(F, n_max, window=None):
    """``{n <= n_max : some point of the window has least period n}``."""
    return {n for n in range(1, n_max + 1) if periodic_witness(F, n, window) is not None}


def circle_periodic_witness(F, n):
    """A point of ``[0, 1)`` whose projection has least period ``n`` on the circle."""
    lo, hi = Fraction(0), Fraction(1)
    for k in _shift_range(F, n, lo, hi):
        for a, b in raw_solutions(F, n, k, (lo, hi)):
            if a == b:
                if a < hi and _mod1_period(F, a, n) == n:
                    return a
            else:
                w = segment_witness(F, a, min(b, hi), n, mod1=True)
                if w is not None and w < hi:
                    return w
    return None


def circle_periods_set(F, n_max):
    """Least periods ``<= n_max`` of the circle map: ``F^n(x) = x + k`` for some integer ``k``.

    Unlike :func:`periods_set` this counts periodic (mod 1) points, which is
    what periods of the circle map mean.
    """
    return {n for n in range(1, n_max + 1) if circle_periodic_witness(F, n) is not None}


def orbit_of(F, x, n_max):
    """The periodic orbit through ``x``; raises if it does not close by ``n_max``."""
    x = as_rational(x)
    cycle = [x]
    y = x
    for _ in range(n_max):
        y = evaluate(F, y)
        if y == x:
            return Orbit(tuple(cycle))
        cycle.append(y)
    raise NotPeriodicError("%s is not periodic within %d steps" % (format_rational(x), n_max))


def mod1_rotation(F, x, n_max):
    """Least ``n <= n_max`` with ``F^n(x) - x`` an integer ``k``; returns ``(n, k, k/n)``."""
    if F.degree != 1:
        raise ValueError("degree must be 1, got %d" % F.degree)
    x = as_rational(x)
    y = x
    for n in range(1, n_max + 1):
        y = evaluate(F, y)
        k = y - x
        if k.denominator == 1:
            return n, int(k), Fraction(int(k), n)
    raise NotPeriodicError("%s is not periodic (mod 1) within %d steps" % (format_rational(x), n_max))


def iter_orbits(F, n, window=None):
    """Orbits through the solutions of ``F^n(x) = x`` (segment ends for segments)."""
    for a, b in raw_solutions(F, n, 0, window):
        for x in ((a,) if a == b else (a, b)):
            yield orbit_of(F, x, n)


def find_large_orbit(F, n_max, window=None):
    """First true periodic orbit of period ``<= n_max`` with diameter ``> 1``.

    On a segment of solutions every orbit point is affine in ``x``, so the
    diameter is convex there and the segment ends are enough.
    Returns ``None`` when the window holds no such orbit.
    """
    for n in range(1, n_max + 1):
        for orbit in iter_orbits(F, n, window):
            if orbit.diameter > 1:
                return orbit
    return None


def check_solution(F, x, n, k=0):
    return iterate(F, x, n) == as_rational(x) + k


def complete_window(F):
    """A window holding every true periodic point, or ``None`` for degree one.

    For ``|d| >= 2`` let ``M = max |F(x) - d*x|``; a point with
    ``|x| > M/(|d| - 1)`` has ``|F(x)| > |x|``, so the orbit point of largest
    modulus lies inside ``[-M/(|d|-1), M/(|d|-1)]`` and hence the whole orbit
    does.  For degree zero every orbit lies in the bounded image ``F(R)``.
    Degree ``-1`` has no such bound in general.
    """
    d = F.degree
    if d == 1:
        return None
    if d == 0:
        return image(F, 0, 1)
    if d == -1:
        raise ValueError("degree -1 liftings need an explicit window")
    xs, ys = F.table
    M = max(abs(y - d * x) for x, y in zip(xs, ys))
    r = M / (abs(d) - 1)
    return -r, r
