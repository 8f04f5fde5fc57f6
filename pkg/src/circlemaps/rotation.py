"""Envelope maps, rotation numbers and rotation intervals of degree-one liftings."""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .plmap import (
    PLLift,
    as_rational,
    evaluate,
    format_rational,
    PowerCache,
    simplify,
)

DEFAULT_DENOMINATOR_BOUND = 10**4


@dataclass(frozen=True)
class Exact:
    """Certified rotation number ``p/q``.

    ``certificate`` holds ``(min, max)`` of ``G^q(x) - x - p`` over one
    fundamental domain; a zero in between proves a periodic (mod 1) point.
    """

    value: Fraction
    certificate: tuple = None

    is_exact = True

    @property
    def lower(self):
        return self.value

    @property
    def upper(self):
        return self.value

    def __str__(self):
        return format_rational(self.value)


@dataclass(frozen=True)
class Bracket:
    """Rotation number known to lie strictly inside ``(lo, hi)``."""

    lo: Fraction
    hi: Fraction
    denominator_bound: int

    is_exact = False

    @property
    def lower(self):
        return self.lo

    @property
    def upper(self):
        return self.hi

    def __str__(self):
        return "(%s, %s)" % (format_rational(self.lo), format_rational(self.hi))


def _require_degree_one(F):
    if F.degree != 1:
        raise ValueError("degree must be 1, got %d" % F.degree)


def _running_extreme(points, use_max):
    """Running max (or min) of the polyline ``points`` taken in list order."""
    def better(u, v):
        return u > v if use_max else u < v

    x0, y0 = points[0]
    best = y0
    out = [(x0, y0)]
    for (xa, ya), (xb, yb) in zip(points, points[1:]):
        if better(yb, best):
            if better(best, ya):
                # the segment crosses the current record level
                xc = xa + (best - ya) * (xb - xa) / (yb - ya)
                out.append((xc, best))
            out.append((xb, yb))
            best = yb
        else:
            out.append((xb, best))
    return out


def _polyline(F, lo, hi):
    xs, ys = F.table
    d = F.degree
    pts = []
    for j in range(floor(lo), ceil(hi) + 1):
        for x, y in zip(xs[:-1], ys[:-1]):
            if lo <= x + j <= hi:
                pts.append((x + j, y + d * j))
    if pts[-1][0] != hi:
        pts.append((hi, evaluate(F, hi)))
    return pts


def _restrict(points, lo, hi):
    """Lifting anchors on ``[lo, hi]`` from a polyline covering it."""
    out = []
    for (xa, ya), (xb, yb) in zip(points, points[1:]):
        if xa <= lo < xb:
            out.append((lo, ya + (yb - ya) * (lo - xa) / (xb - xa)))
        if lo < xb <= hi:
            out.append((xb, yb))
    return simplify(out)


def upper_map(F):
    """``x -> sup{F(y) : y <= x}`` for a degree-one lifting.

    For degree one the sup is a max over ``[x - 1, x]``, so a running max
    started at ``-1`` gives the envelope on ``[0, 1]``.
    """
    _require_degree_one(F)
    env = _running_extreme(_polyline(F, -1, 1), use_max=True)
    return PLLift(_restrict(env, 0, 1), 1)


def lower_map(F):
    """``x -> inf{F(y) : y >= x}`` for a degree-one lifting."""
    _require_degree_one(F)
    line = _polyline(F, 0, 2)
    env = _running_extreme(line[::-1], use_max=False)[::-1]
    return PLLift(_restrict(env, 0, 1), 1)


def displacement_range(G, p=0):
    """``(min, max)`` of ``G(x) - x - p`` over one fundamental domain."""
    xs, ys = G.table
    vals = [y - x for x, y in zip(xs, ys)]
    return min(vals) - p, max(vals) - p


def _compare(powers, p, q):
    """Sign of ``rho(G) - p/q`` for nondecreasing degree-one ``G``.

    Returns ``(sign, (min, max))`` with the range of ``G^q(x) - x - p``.
    """
    mn, mx = powers.table(q).displacement_range()
    mn -= p
    mx -= p
    if mn > 0:
        return 1, (mn, mx)
    if mx < 0:
        return -1, (mn, mx)
    return 0, (mn, mx)


def monotone_rotation_number(G, denominator_bound=DEFAULT_DENOMINATOR_BOUND):
    """Rotation number of a nondecreasing degree-one lifting.

    Stern-Brocot descent between Farey neighbours, galloping along runs.
    A rational with denominator at most ``denominator_bound`` is returned
    as :class:`Exact`.  Otherwise the descent continues (without declaring
    exact values) until the bracket is no wider than
    ``1 / denominator_bound**2``.
    """
    _require_degree_one(G)
    if not G.is_nondecreasing():
        raise ValueError("map is not nondecreasing")
    Q = int(denominator_bound)
    if Q < 1:
        raise ValueError("denominator_bound must be positive")
    cache = {}
    powers = PowerCache(G)

    def sign(num, den):
        key = (num, den)
        if key not in cache:
            cache[key] = _compare(powers, num, den)
        return cache[key]

    mn, mx = displacement_range(G)
    a, c = floor(mn), ceil(mx)
    # integers first: rho lies in [mn, mx]
    lo = hi = None
    for m in range(a, c + 1):
        s, cert = sign(m, 1)
        if s == 0:
            return Exact(Fraction(m), cert)
        if s > 0:
            lo = m
        elif hi is None:
            hi = m
    lo, hi = (lo, 1), (hi, 1)
    exact_phase = True
    while True:
        (a, b), (c, d) = lo, hi
        if exact_phase and b + d > Q:
            exact_phase = False
        if not exact_phase and b * d >= Q * Q:
            return Bracket(Fraction(a, b), Fraction(c, d), Q)
        s, cert = sign(a + c, b + d)
        if s == 0:
            if exact_phase:
                return Exact(Fraction(a + c, b + d), cert)
            return _bracket_around((a + c, b + d), lo, hi, Q)
        towards_hi = s > 0
        limit = _limit(lo, hi, Q, exact_phase, towards_hi)
        lo, hi, found = _gallop(sign, lo, hi, towards_hi, limit)
        if found is not None:
            (num, den, cert), left, right = found
            if exact_phase:
                return Exact(Fraction(num, den), cert)
            return _bracket_around((num, den), left, right, Q)


def _limit(lo, hi, Q, exact_phase, towards_hi):
    """Largest useful step count for a run (see :func:`_gallop`).

    While exact values may still be declared, candidates keep their
    denominators within ``Q``; afterwards the run only needs to go as far
    as the first bracket of width ``<= 1/Q**2``.
    """
    (a, b), (c, d) = lo, hi
    fixed, moving = (d, b) if towards_hi else (b, d)
    if exact_phase:
        return max(1, (Q - moving) // fixed)
    return max(1, -(-(Q * Q - b * d) // (fixed * fixed)))


def _gallop(sign, lo, hi, towards_hi, limit):
    """Move one Farey endpoint along its run toward the other.

    Candidates are ``(a + t*c)/(b + t*d)`` (moving ``lo``) or
    ``(c + t*a)/(d + t*b)`` (moving ``hi``) for ``t >= 1``; ``t = 1`` is the
    mediant, already known to lie on the moving side.  Returns the new
    neighbours and, on an exact hit, ``((num, den, cert), left, right)``
    with the Farey neighbours of the hit.
    """
    (a, b), (c, d) = lo, hi
    if towards_hi:
        def cand(t):
            return a + t * c, b + t * d
        side = 1
    else:
        def cand(t):
            return c + t * a, d + t * b
        side = -1

    def hit(t, cert):
        num, den = cand(t)
        if towards_hi:
            return lo, hi, ((num, den, cert), cand(t - 1), hi)
        return lo, hi, ((num, den, cert), lo, cand(t - 1))

    good = 1
    bad = limit + 1
    t = 2
    while t <= limit:
        s, cert = sign(*cand(t))
        if s == 0:
            return hit(t, cert)
        if s != side:
            bad = t
            break
        good = t
        t *= 2
    while bad - good > 1:
        mid = (good + bad) // 2
        s, cert = sign(*cand(mid))
        if s == 0:
            return hit(mid, cert)
        if s == side:
            good = mid
        else:
            bad = mid
    new = cand(good)
    if good + 1 <= limit:
        s, cert = sign(*cand(good + 1))
        if s == 0:
            return hit(good + 1, cert)
        nxt = cand(good + 1)
        return (new, nxt, None) if towards_hi else (nxt, new, None)
    return (new, hi, None) if towards_hi else (lo, new, None)


def _bracket_around(frac, left, right, Q):
    """Bracket of width at most ``1/Q**2`` strictly around ``num/den``.

    ``left`` and ``right`` are the Farey neighbours of ``num/den``; the
    bracket ends are Stern-Brocot descendants of it, so every other fraction
    inside has a denominator larger than ``den``.
    """
    num, den = frac
    (a, b), (c, d) = left, right
    t = 1
    while True:
        lo = Fraction(a + t * num, b + t * den)
        hi = Fraction(c + t * num, d + t * den)
        if hi - lo <= Fraction(1, Q * Q):
            return Bracket(lo, hi, Q)
        t *= 2


def rotation_interval(F, denominator_bound=DEFAULT_DENOMINATOR_BOUND):
    """Endpoints ``(rho(lower_map F), rho(upper_map F))``."""
    _require_degree_one(F)
    left = monotone_rotation_number(lower_map(F), denominator_bound)
    right = monotone_rotation_number(upper_map(F), denominator_bound)
    return left, right


def interval_contains(bounds, a, b):
    """True when the rotation interval is certified to contain ``[a, b]``."""
    left, right = bounds
    return left.upper <= as_rational(a) and as_rational(b) <= right.lower


def forced_periods(a, b, N):
    """``{q <= N : a < p/q < b for some integer p}``."""
    a, b = as_rational(a), as_rational(b)
    if a > b:
        raise ValueError("need a <= b")
    out = set()
    for q in range(1, N + 1):
        p = floor(a * q) + 1
        if p < b * q:
            out.add(q)
    return out


def format_interval(bounds):
    """``[lo, hi] exact`` or ``[lo, hi] bracket:Q`` (outer bounds)."""
    left, right = bounds
    text = "[%s, %s]" % (format_rational(left.lower), format_rational(right.upper))
    if left.is_exact and right.is_exact:
        return text + " exact"
    Q = left.denominator_bound if not left.is_exact else right.denominator_bound
    return text + " bracket:%d" % Q
