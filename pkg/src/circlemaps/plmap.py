"""Exact piecewise-linear liftings of circle maps.

A lifting ``F`` of degree ``d`` satisfies ``F(x + 1) = F(x) + d``.  It is
stored as the anchors the caller gave on some fundamental domain
``[t, t + 1]`` and, internally, as a table normalized to ``[0, 1]``.
All arithmetic is done with :class:`fractions.Fraction`.
"""
from bisect import bisect_right
from fractions import Fraction
from math import ceil, floor

from . import _backend

Rational = Fraction

DEFAULT_PIECE_CAP = 10**6


class LiftError(ValueError):
    """Raised when anchors do not describe a valid lifting."""


def as_rational(value):
    """Convert ints, Fractions and ``"a/b"`` strings to a Fraction.

    Floats are rejected; exactness is the point.
    """
    if isinstance(value, float):
        raise TypeError("floats are not exact: %r" % value)
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def _collinear(p, q, r):
    return (q[1] - p[1]) * (r[0] - q[0]) == (r[1] - q[1]) * (q[0] - p[0])


def simplify(points):
    """Drop interior points that lie on the segment through their neighbours."""
    out = [points[0]]
    for k in range(1, len(points) - 1):
        if not _collinear(out[-1], points[k], points[k + 1]):
            out.append(points[k])
    out.append(points[-1])
    return out


class PLLift:
    """Piecewise-linear lifting of a circle map.

    Instances are immutable.  ``anchors`` keeps the caller's points on
    ``[t, t + 1]``; evaluation extends them with ``F(x + k) = F(x) + d*k``.
    """

    __slots__ = ("degree", "anchors", "_xs", "_ys", "_kernel_tables")

    def __init__(self, anchors, degree):
        if int(degree) != degree:
            raise LiftError("degree must be an integer")
        degree = int(degree)
        pts = [(as_rational(x), as_rational(y)) for x, y in anchors]
        if len(pts) < 2:
            raise LiftError("need at least two anchors")
        for (x0, _), (x1, _) in zip(pts, pts[1:]):
            if not x0 < x1:
                raise LiftError("anchor x-coordinates must be strictly increasing (%s, %s)"
                                % (format_rational(x0), format_rational(x1)))
        if pts[-1][0] - pts[0][0] != 1:
            raise LiftError("anchors must span exactly one unit, got %s"
                            % format_rational(pts[-1][0] - pts[0][0]))
        if pts[-1][1] - pts[0][1] != degree:
            raise LiftError("last anchor value must equal first value + degree (%d), got %s"
                            % (degree, format_rational(pts[-1][1] - pts[0][1])))
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "anchors", tuple(pts))
        xs, ys = _normalize(pts, degree)
        object.__setattr__(self, "_xs", xs)
        object.__setattr__(self, "_ys", ys)
        object.__setattr__(self, "_kernel_tables", {})

    def __setattr__(self, name, value):
        raise AttributeError("PLLift is immutable")

    @property
    def start(self):
        return self.anchors[0][0]

    def kernel_table(self):
        """This map as a table of the active kernel (cached per backend)."""
        kern = _backend.kernel
        t = self._kernel_tables.get(kern.BACKEND)
        if t is None:
            t = self._kernel_tables[kern.BACKEND] = kern.Table(self._xs, self._ys, self.degree)
        return t

    @property
    def table(self):
        """Normalized ``(xs, ys)`` on ``[0, 1]`` with collinear points removed."""
        return self._xs, self._ys

    def breakpoints(self):
        """Interior breakpoints in ``[0, 1)``; ``0`` is always included."""
        return self._xs[:-1]

    def __call__(self, x):
        return evaluate(self, x)

    def slopes(self):
        xs, ys = self._xs, self._ys
        return [(ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1)]

    def is_nondecreasing(self):
        return all(s >= 0 for s in self.slopes())

    def __eq__(self, other):
        if not isinstance(other, PLLift):
            return NotImplemented
        if self.degree != other.degree:
            return False
        merged = sorted(set(self._xs) | set(other._xs))
        return all(evaluate(self, x) == evaluate(other, x) for x in merged)

    def __hash__(self):
        return hash((self.degree, self._xs, self._ys))

    def __repr__(self):
        body = ", ".join("(%s, %s)" % (format_rational(x), format_rational(y))
                         for x, y in self.anchors)
        return "PLLift(degree=%d, anchors=[%s])" % (self.degree, body)


def _interpolate(pts, x):
    xs = [p[0] for p in pts]
    k = bisect_right(xs, x) - 1
    if k >= len(pts) - 1:
        return pts[-1][1]
    (x0, y0), (x1, y1) = pts[k], pts[k + 1]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def _normalize(pts, degree):
    t = pts[0][0]
    shifted = {}
    for x, y in pts[:-1]:
        j = floor(x)
        shifted[x - j] = y - degree * j
    J = ceil(t)
    y0 = _interpolate(pts, Fraction(J)) - degree * J
    shifted[Fraction(0)] = y0
    shifted[Fraction(1)] = y0 + degree
    table = simplify(sorted(shifted.items()))
    return tuple(p[0] for p in table), tuple(p[1] for p in table)


def make_lift(anchors, degree):
    """Validated constructor; see :class:`PLLift`."""
    return PLLift(anchors, degree)


def identity():
    return PLLift([(0, 0), (1, 1)], 1)


def rigid_rotation(c):
    c = as_rational(c)
    return PLLift([(0, c), (1, c + 1)], 1)


def evaluate(F, x):
    """Exact value ``F(x)`` for any rational ``x``."""
    x = as_rational(x)
    xs, ys = F._xs, F._ys
    j = floor(x)
    f = x - j
    k = bisect_right(xs, f) - 1
    x0, x1 = xs[k], xs[k + 1]
    y0, y1 = ys[k], ys[k + 1]
    return y0 + (y1 - y0) * (f - x0) / (x1 - x0) + F.degree * j


def iterate(F, x, n):
    """``F`` applied ``n`` times to ``x``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = as_rational(x)
    for _ in range(n):
        x = evaluate(F, x)
    return x


def from_pieces(pieces, degree):
    """Build a lifting from affine pieces ``(lo, hi, a, b)`` tiling ``[0, 1]``."""
    pts = [(lo, a * lo + b) for lo, hi, a, b in pieces]
    lo, hi, a, b = pieces[-1]
    pts.append((hi, a * hi + b))
    return PLLift(simplify(pts), degree)


def from_table(table):
    xs, ys = table.lists()
    return PLLift(list(zip(xs, ys)), table.d)


def compose(F, G, cap=DEFAULT_PIECE_CAP):
    """The lifting ``F o G`` (apply ``G`` first), of degree ``deg F * deg G``."""
    kern = _backend.kernel
    return from_table(kern.compose(F.kernel_table(), G.kernel_table(), cap))


def power(F, n, cap=DEFAULT_PIECE_CAP):
    """``F^n`` as a lifting of degree ``d^n``, composed piece by piece.

    Raises ``OverflowError`` when the number of pieces on one fundamental
    domain would exceed ``cap``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return F
    kern = _backend.kernel
    parts = kern.pieces([F.kernel_table()] * n, 0, 1, cap)
    return from_pieces(parts, F.degree**n)


class PowerCache:
    """Kernel tables of ``F^(2^i)``, reused across many powers of one map."""

    def __init__(self, F, cap=DEFAULT_PIECE_CAP):
        self.kernel = _backend.kernel
        self.cap = cap
        self.squares = [F.kernel_table()]

    def table(self, n):
        if n < 1:
            raise ValueError("n must be >= 1")
        kern = self.kernel
        result = None
        i = 0
        while n:
            while len(self.squares) <= i:
                sq = self.squares[-1]
                self.squares.append(kern.compose(sq, sq, self.cap))
            if n & 1:
                base = self.squares[i]
                result = base if result is None else kern.compose(base, result, self.cap)
            n >>= 1
            i += 1
        return result


def power_by_squaring(F, n, cap=DEFAULT_PIECE_CAP):
    """``F^n`` via repeated squaring; cheaper for monotone maps and large ``n``."""
    return from_table(PowerCache(F, cap).table(n))


def reflect(F):
    """The conjugate ``x -> -F(-x)``; it has the same degree as ``F``."""
    xs, ys = F._xs, F._ys
    # -F(-x) on [0, 1] uses F on [-1, 0], i.e. F(u) = F(u + 1) - d.
    pts = [(1 - x, -(y - F.degree)) for x, y in zip(xs, ys)]
    return PLLift(sorted(pts), F.degree)


def image(F, lo, hi):
    """Exact image interval ``[min F, max F]`` of ``[lo, hi]``."""
    lo, hi = as_rational(lo), as_rational(hi)
    if lo > hi:
        raise ValueError("empty interval [%s, %s]" % (lo, hi))
    mn = mx = evaluate(F, lo)
    v = evaluate(F, hi)
    mn, mx = min(mn, v), max(mx, v)
    xs, ys, d = F._xs, F._ys, F.degree
    j0, j1 = floor(lo), floor(hi)
    for j in sorted({j0, j0 + 1, j1 - 1, j1}):
        if j0 <= j <= j1:
            for x, y in zip(xs, ys):
                if lo < x + j < hi:
                    v = y + d * j
                    mn, mx = min(mn, v), max(mx, v)
    return mn, mx


def pieces_on(F, lo, hi):
    """Affine pieces ``(lo, hi, slope, intercept)`` of ``F`` on ``[lo, hi]``."""
    return _backend.kernel.pieces([F.kernel_table()], as_rational(lo), as_rational(hi))
