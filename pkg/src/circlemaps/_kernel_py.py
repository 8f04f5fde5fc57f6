"""Pure-Python piece-refinement kernel.

A :class:`Table` describes a lifting of degree ``d`` by its anchors on the
normalized fundamental domain ``[0, 1]``.  :func:`walk` explores the tree of
affine pieces of a composition ``tables[n-1] o ... o tables[0]`` on a root
interval, depth first and in increasing ``x`` order.

The compiled twin ``_kernel.pyx`` has the same surface.  Both accept and
return :class:`fractions.Fraction`; only the internal number type differs.
"""
from fractions import Fraction
from math import floor

BACKEND = "python"

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _num(v):
    return v if type(v) is Fraction else Fraction(v)


def _simplify(xs, ys):
    ox, oy = [xs[0]], [ys[0]]
    for k in range(1, len(xs) - 1):
        if (ys[k] - oy[-1]) * (xs[k + 1] - xs[k]) != (ys[k + 1] - ys[k]) * (xs[k] - ox[-1]):
            ox.append(xs[k])
            oy.append(ys[k])
    ox.append(xs[-1])
    oy.append(ys[-1])
    return ox, oy


class Table:
    """Normalized lifting: ``xs[0] == 0``, ``xs[-1] == 1``, ``ys[-1] == ys[0] + d``."""

    __slots__ = ("xs", "ys", "d", "s", "c", "m")

    def __init__(self, xs, ys, d):
        xs, ys = _simplify([_num(x) for x in xs], [_num(y) for y in ys])
        self.xs = xs
        self.ys = ys
        self.d = int(d)
        self.m = len(xs) - 1
        self.s = []
        self.c = []
        for i in range(self.m):
            s = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
            self.s.append(s)
            self.c.append(ys[i] - s * xs[i])

    def lists(self):
        return list(self.xs), list(self.ys)

    def __len__(self):
        return self.m

    def locate(self, y):
        """``(j, i)`` with ``y`` in piece ``i`` of the period ``[j, j + 1)``."""
        j = floor(y)
        f = y - j
        xs = self.xs
        lo, hi = 0, self.m - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if xs[mid] <= f:
                lo = mid
            else:
                hi = mid - 1
        return j, lo

    def value(self, y):
        y = _num(y)
        j, i = self.locate(y)
        return self.s[i] * (y - j) + self.c[i] + self.d * j

    def image(self, lo, hi):
        """Exact ``(min, max)`` of the map over ``[lo, hi]``."""
        lo, hi = _num(lo), _num(hi)
        vlo = self.value(lo)
        vhi = self.value(hi)
        mn, mx = (vlo, vhi) if vlo <= vhi else (vhi, vlo)
        j0 = floor(lo)
        j1 = floor(hi)
        xs, ys, d = self.xs, self.ys, self.d
        for j in sorted({j0, j0 + 1, j1 - 1, j1}):
            if j < j0 or j > j1:
                continue
            for i in range(self.m):
                x = xs[i] + j
                if lo < x < hi:
                    v = ys[i] + d * j
                    if v < mn:
                        mn = v
                    elif v > mx:
                        mx = v
        return mn, mx

    def displacement_range(self):
        """``(min, max)`` of ``F(x) - x`` over one fundamental domain."""
        vals = [y - x for x, y in zip(self.xs, self.ys)]
        return min(vals), max(vals)

    def children(self, lo, hi, a, b):
        """Split the piece ``x -> a*x + b`` on ``[lo, hi]`` through this map."""
        if a == 0 or lo == hi:
            return [(lo, hi, _ZERO, self.value(a * lo + b))]
        ylo = a * lo + b
        yhi = a * hi + b
        if ylo > yhi:
            ylo, yhi = yhi, ylo
        j, i = self.locate(ylo)
        xs, s, c, d, m = self.xs, self.s, self.c, self.d, self.m
        out = []
        u = ylo
        while True:
            end = xs[i + 1] + j
            v = end if end < yhi else yhi
            sl = s[i]
            out.append(((u - b) / a, (v - b) / a, sl * a, sl * b + c[i] + (d - sl) * j))
            if v >= yhi:
                break
            u = v
            i += 1
            if i == m:
                i = 0
                j += 1
        if a < 0:
            out = [(q, p, aa, bb) for (p, q, aa, bb) in reversed(out)]
        return out


def _reach_misses(tables, depth, ylo, yhi, tlo, thi):
    for t in tables[depth:]:
        ylo, yhi = t.image(ylo, yhi)
    return yhi < tlo or ylo > thi


def walk(tables, lo, hi, shift=None, constraints=None, solve=False):
    """Depth-first walk over the affine pieces of the composed map.

    ``shift`` enables pruning of subtrees that cannot satisfy
    ``F^n(x) = x + shift``; it is required when ``solve`` is set.
    ``constraints[i]`` (or ``None``) restricts ``F^i(x)`` to a closed
    interval, for ``0 <= i <= n``.

    Yields ``(lo, hi, a, b)`` pieces, or with ``solve`` the solutions as
    ``(lo, hi)`` pairs (``lo == hi`` for isolated points).
    """
    lo = _num(lo)
    hi = _num(hi)
    n = len(tables)
    if solve and shift is None:
        raise ValueError("solve requires a shift")
    if shift is not None:
        shift = _num(shift)
    if constraints is not None:
        constraints = [None if c is None else (_num(c[0]), _num(c[1])) for c in constraints]
    stack = [(0, lo, hi, _ONE, _ZERO)]
    while stack:
        depth, plo, phi, a, b = stack.pop()
        if constraints is not None and constraints[depth] is not None:
            clo, chi = constraints[depth]
            ylo = a * plo + b
            if a == 0:
                if ylo < clo or ylo > chi:
                    continue
            else:
                yhi = a * phi + b
                if ylo > yhi:
                    ylo, yhi = yhi, ylo
                if yhi < clo or ylo > chi:
                    continue
                if ylo < clo:
                    ylo = clo
                if yhi > chi:
                    yhi = chi
                p = (ylo - b) / a
                q = (yhi - b) / a
                if p > q:
                    p, q = q, p
                plo, phi = p, q
        if depth == n:
            if not solve:
                yield (plo, phi, a, b)
            elif a == 1:
                if b == shift:
                    yield (plo, phi)
            else:
                x = (shift - b) / (a - 1)
                if plo <= x <= phi:
                    yield (x, x)
            continue
        if shift is not None:
            ylo = a * plo + b
            yhi = a * phi + b
            if ylo > yhi:
                ylo, yhi = yhi, ylo
            if _reach_misses(tables, depth, ylo, yhi, plo + shift, phi + shift):
                continue
        kids = tables[depth].children(plo, phi, a, b)
        for kid in reversed(kids):
            stack.append((depth + 1,) + kid)


def pieces(tables, lo, hi, cap=None):
    """All affine pieces of the composition on ``[lo, hi]``.

    Raises ``OverflowError`` once more than ``cap`` pieces are produced.
    """
    out = []
    for piece in walk(tables, lo, hi):
        out.append(piece)
        if cap is not None and len(out) > cap:
            raise OverflowError("piece count exceeds cap %d" % cap)
    return out


def compose(f, g, cap=None):
    """Table of ``f o g`` (apply ``g`` first) on ``[0, 1]``."""
    if f.m == 1 and g.m == 1:
        # both globally affine
        v = f.value(g.ys[0])
        return Table([_ZERO, _ONE], [v, v + f.d * g.d], f.d * g.d)
    parts = pieces([g, f], _ZERO, _ONE, cap)
    xs = [p[0] for p in parts]
    ys = [p[2] * p[0] + p[3] for p in parts]
    last = parts[-1]
    xs.append(last[1])
    ys.append(last[2] * last[1] + last[3])
    return Table(xs, ys, f.d * g.d)
