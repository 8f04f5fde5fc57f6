# cython: language_level=3
"""Compiled piece-refinement kernel.

Same surface as ``_kernel_py``; rationals are held as ``gmpy2.mpq``
internally and converted to and from :class:`fractions.Fraction` at the
boundary.
"""
from fractions import Fraction

from gmpy2 import mpq

BACKEND = "compiled"

cdef object _ZERO = mpq(0)
cdef object _ONE = mpq(1)
cdef object _mpq_type = type(_ZERO)


cdef inline object _num(object v):
    if type(v) is _mpq_type:
        return v
    if type(v) is Fraction:
        return mpq(v.numerator, v.denominator)
    return mpq(v)


cdef inline object _frac(object q):
    return Fraction(int(q.numerator), int(q.denominator))


cdef inline object _floor(object q):
    return q.numerator // q.denominator


cdef tuple _simplify(list xs, list ys):
    cdef list ox = [xs[0]]
    cdef list oy = [ys[0]]
    cdef Py_ssize_t k
    for k in range(1, len(xs) - 1):
        if (ys[k] - oy[-1]) * (xs[k + 1] - xs[k]) != (ys[k + 1] - ys[k]) * (xs[k] - ox[-1]):
            ox.append(xs[k])
            oy.append(ys[k])
    ox.append(xs[-1])
    oy.append(ys[-1])
    return ox, oy


cdef class Table:
    """Normalized lifting: ``xs[0] == 0``, ``xs[-1] == 1``, ``ys[-1] == ys[0] + d``."""

    cdef public list xs, ys, s, c
    cdef public object d
    cdef public Py_ssize_t m

    def __init__(self, xs, ys, d):
        cdef Py_ssize_t i
        xs, ys = _simplify([_num(x) for x in xs], [_num(y) for y in ys])
        self.xs = xs
        self.ys = ys
        self.d = int(d)
        self.m = len(xs) - 1
        self.s = []
        self.c = []
        for i in range(self.m):
            sl = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
            self.s.append(sl)
            self.c.append(ys[i] - sl * xs[i])

    def lists(self):
        return [_frac(x) for x in self.xs], [_frac(y) for y in self.ys]

    def __len__(self):
        return self.m

    cdef tuple _locate(self, object y):
        cdef object j = _floor(y)
        cdef object f = y - j
        cdef list xs = self.xs
        cdef Py_ssize_t lo = 0, hi = self.m - 1, mid
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if xs[mid] <= f:
                lo = mid
            else:
                hi = mid - 1
        return j, lo

    def locate(self, y):
        j, i = self._locate(_num(y))
        return int(j), i

    cdef object _value(self, object y):
        cdef Py_ssize_t i
        j, i = self._locate(y)
        return self.s[i] * (y - j) + self.c[i] + self.d * j

    def value(self, y):
        return _frac(self._value(_num(y)))

    cdef tuple _image(self, object lo, object hi):
        cdef object vlo = self._value(lo)
        cdef object vhi = self._value(hi)
        cdef object mn, mx, x, v, dj
        cdef Py_ssize_t i
        if vlo <= vhi:
            mn, mx = vlo, vhi
        else:
            mn, mx = vhi, vlo
        j0 = _floor(lo)
        j1 = _floor(hi)
        cdef list xs = self.xs, ys = self.ys
        for j in sorted({j0, j0 + 1, j1 - 1, j1}):
            if j < j0 or j > j1:
                continue
            dj = self.d * j
            for i in range(self.m):
                x = xs[i] + j
                if lo < x < hi:
                    v = ys[i] + dj
                    if v < mn:
                        mn = v
                    elif v > mx:
                        mx = v
        return mn, mx

    def image(self, lo, hi):
        mn, mx = self._image(_num(lo), _num(hi))
        return _frac(mn), _frac(mx)

    def displacement_range(self):
        vals = [y - x for x, y in zip(self.xs, self.ys)]
        return _frac(min(vals)), _frac(max(vals))

    cdef list _children(self, object lo, object hi, object a, object b):
        cdef object ylo, yhi, u, v, end, sl, j
        cdef Py_ssize_t i, m = self.m
        cdef list xs = self.xs, s = self.s, c = self.c
        cdef list out = []
        cdef object d = self.d
        if a == 0 or lo == hi:
            return [(lo, hi, _ZERO, self._value(a * lo + b))]
        ylo = a * lo + b
        yhi = a * hi + b
        if ylo > yhi:
            ylo, yhi = yhi, ylo
        j, i = self._locate(ylo)
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

    def children(self, lo, hi, a, b):
        return [tuple(_frac(v) for v in kid)
                for kid in self._children(_num(lo), _num(hi), _num(a), _num(b))]


cdef bint _reach_misses(list tables, Py_ssize_t depth, object ylo, object yhi, object tlo, object thi):
    cdef Table t
    cdef Py_ssize_t k
    for k in range(depth, len(tables)):
        t = tables[k]
        ylo, yhi = t._image(ylo, yhi)
    return yhi < tlo or ylo > thi


def _walk(list tables, object lo, object hi, object shift, list constraints, bint solve):
    cdef Py_ssize_t n = len(tables), depth
    cdef list stack = [(0, lo, hi, _ONE, _ZERO)]
    cdef list kids
    cdef Table t
    cdef object plo, phi, a, b, ylo, yhi, clo, chi, p, q, x
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
        t = tables[depth]
        kids = t._children(plo, phi, a, b)
        for k in range(len(kids) - 1, -1, -1):
            stack.append((depth + 1,) + kids[k])


def _prepare(tables, lo, hi, shift, constraints, solve):
    if solve and shift is None:
        raise ValueError("solve requires a shift")
    tables = list(tables)
    for t in tables:
        if not isinstance(t, Table):
            raise TypeError("tables must come from the compiled kernel")
    if shift is not None:
        shift = _num(shift)
    if constraints is not None:
        constraints = [None if c is None else (_num(c[0]), _num(c[1])) for c in constraints]
    return tables, _num(lo), _num(hi), shift, constraints


def walk(tables, lo, hi, shift=None, constraints=None, solve=False):
    """Depth-first walk over the affine pieces of the composed map (see ``_kernel_py.walk``)."""
    tables, lo, hi, shift, constraints = _prepare(tables, lo, hi, shift, constraints, solve)
    for item in _walk(tables, lo, hi, shift, constraints, solve):
        yield tuple(_frac(v) for v in item)


def pieces(tables, lo, hi, cap=None):
    return [tuple(_frac(v) for v in p) for p in _pieces(tables, lo, hi, cap)]


cdef list _pieces(tables, lo, hi, cap):
    tables, lo, hi, _, _ = _prepare(tables, lo, hi, None, None, False)
    cdef list out = []
    for piece in _walk(tables, lo, hi, None, None, False):
        out.append(piece)
        if cap is not None and len(out) > cap:
            raise OverflowError("piece count exceeds cap %d" % cap)
    return out


def compose(Table f, Table g, cap=None):
    """Table of ``f o g`` (apply ``g`` first) on ``[0, 1]``."""
    cdef list parts
    if f.m == 1 and g.m == 1:
        # both globally affine
        v = f._value(g.ys[0])
        return Table([_ZERO, _ONE], [v, v + f.d * g.d], f.d * g.d)
    parts = _pieces([g, f], _ZERO, _ONE, cap)
    xs = [p[0] for p in parts]
    ys = [p[2] * p[0] + p[3] for p in parts]
    last = parts[-1]
    xs.append(last[1])
    ys.append(last[2] * last[1] + last[3])
    return Table(xs, ys, f.d * g.d)
