"""Interval partitions, covering graphs, loops and the horseshoe construction."""
from dataclasses import dataclass

from . import _backend
from .periodic import least_period
from .plmap import as_rational, evaluate, format_rational, image, iterate

DEFAULT_LOOP_CAP = 10**6


class LoopError(ValueError):
    """Pullback along a loop produced no periodic point."""


class HorseshoeError(RuntimeError):
    """A step of the horseshoe construction failed."""


def _interval(iv):
    lo, hi = as_rational(iv[0]), as_rational(iv[1])
    if not lo < hi:
        raise ValueError("degenerate interval [%s, %s]" % (format_rational(lo), format_rational(hi)))
    return lo, hi


@dataclass(frozen=True)
class Partition:
    """Ordered closed intervals, consecutive ones sharing an endpoint."""

    intervals: tuple
    labels: tuple

    def __post_init__(self):
        ivs = tuple(_interval(iv) for iv in self.intervals)
        labels = tuple(self.labels) if self.labels is not None else tuple(
            "I_%d" % i for i in range(len(ivs)))
        if len(labels) != len(ivs):
            raise ValueError("one label per interval")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct")
        if not ivs:
            raise ValueError("empty partition")
        for (a, b), (c, d) in zip(ivs, ivs[1:]):
            if b != c:
                raise ValueError("intervals [%s, %s] and [%s, %s] are not adjacent" % tuple(
                    format_rational(v) for v in (a, b, c, d)))
        object.__setattr__(self, "intervals", ivs)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_labelled(cls, items):
        """Build from ``(label, lo, hi)`` triples in any order."""
        items = sorted(((as_rational(a), as_rational(b), lab) for lab, a, b in items))
        return cls(tuple((a, b) for a, b, _ in items), tuple(lab for _, _, lab in items))

    def __len__(self):
        return len(self.intervals)

    def interval(self, label):
        return self.intervals[self.labels.index(label)]

    @property
    def span(self):
        return self.intervals[0][0], self.intervals[-1][1]

    def endpoints(self):
        return [self.intervals[0][0]] + [b for _, b in self.intervals]


@dataclass(frozen=True)
class Loop:
    """Closed walk ``v_0 -> v_1 -> ... -> v_0``; ``vertices`` omits the repeat."""

    vertices: tuple

    def __len__(self):
        return len(self.vertices)

    def __str__(self):
        return " -> ".join(self.vertices + self.vertices[:1])


@dataclass(frozen=True)
class CoverGraph:
    """Arrow ``I -> J`` iff ``J`` is contained in the exact image ``F(I)``."""

    labels: tuple
    adjacency: tuple
    images: tuple

    def arrows(self):
        n = len(self.labels)
        return [(self.labels[i], self.labels[j])
                for i in range(n) for j in range(n) if self.adjacency[i][j]]

    def arrow_count(self):
        return sum(map(sum, self.adjacency))

    def successors(self, i):
        return [j for j, v in enumerate(self.adjacency[i]) if v]

    def report(self):
        return "\n".join("%s -> %s" % arrow for arrow in self.arrows())


def contains(outer, inner):
    return outer[0] <= inner[0] and inner[1] <= outer[1]


def covers(F, I, J):
    """Exact test ``J`` is a subset of ``F(I)``."""
    return contains(image(F, *I), (as_rational(J[0]), as_rational(J[1])))


def covering_graph(F, P):
    images = tuple(image(F, lo, hi) for lo, hi in P.intervals)
    adjacency = tuple(tuple(int(contains(img, J)) for J in P.intervals) for img in images)
    return CoverGraph(P.labels, adjacency, images)


def is_markov(F, P):
    """True when ``F`` maps every partition endpoint to a partition endpoint."""
    ends = set(P.endpoints())
    return all(evaluate(F, e) in ends for e in ends)


def _matmul(A, B):
    n = len(A)
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def closed_walks(G, n):
    """Number of rooted closed walks of length ``n``: ``trace(A^n)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    A = [list(row) for row in G.adjacency]
    size = len(A)
    result = None
    while n:
        if n & 1:
            result = A if result is None else _matmul(result, A)
        n >>= 1
        if n:
            A = _matmul(A, A)
    return sum(result[i][i] for i in range(size))


def _mobius(n):
    result = 1
    k = 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    if n > 1:
        result = -result
    return result


def loop_count(G, n):
    """Number of rooted non-repetitive loops of length ``n``.

    A closed walk that repeats a shorter loop carries no new period, so these
    are removed by Mobius inversion of the closed-walk counts.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(_mobius(n // k) * closed_walks(G, k) for k in range(1, n + 1) if n % k == 0)


def _is_lyndon(word):
    """Strictly smaller than each of its proper rotations."""
    n = len(word)
    return all(word < word[r:] + word[:r] for r in range(1, n))


def simple_loops(G, max_len, vertex_simple=False, cap=DEFAULT_LOOP_CAP):
    """Non-repetitive loops of length ``<= max_len``, one per rotation class.

    A loop is non-repetitive when it is not a shorter loop traversed several
    times.  With ``vertex_simple`` only loops visiting each vertex once are
    kept (graph-theoretic simple cycles).  Loops are written starting from
    their lexicographically least rotation (by vertex index) and listed by
    length, then lexicographically.
    """
    n = len(G.labels)
    succ = [G.successors(i) for i in range(n)]
    found = []

    for start in range(n):
        stack = [(start, (start,))]
        while stack:
            v, path = stack.pop()
            for w in succ[v]:
                if w == start:
                    if _is_lyndon(path):
                        found.append(path)
                        if len(found) > cap:
                            raise OverflowError("more than %d loops" % cap)
                    if vertex_simple:
                        continue
                if w < start or len(path) >= max_len:
                    continue
                if vertex_simple and w in path:
                    continue
                stack.append((w, path + (w,)))
    found.sort(key=lambda p: (len(p), p))
    return [Loop(tuple(G.labels[i] for i in p)) for p in found]


def excluded_periods(G, N):
    """``{n <= N : the graph has no non-repetitive loop of length n}``."""
    return {n for n in range(1, N + 1) if loop_count(G, n) == 0}


def _constraints(P, loop):
    ivs = [P.interval(lab) for lab in loop.vertices]
    return ivs + ivs[:1]


def periodic_point_from_loop(F, P, loop):
    """Exact ``x`` with ``F^len(x) = x`` following the loop's itinerary.

    The intervals along the loop are pulled back exactly; the first
    surviving solution is returned (the midpoint, for a whole segment of
    solutions).
    """
    cons = _constraints(P, loop)
    length = len(loop)
    kern = _backend.kernel
    table = F.kernel_table()
    root = cons[0]
    for a, b in kern.walk([table] * length, root[0], root[1], shift=0, constraints=cons, solve=True):
        return a if a == b else (a + b) / 2
    # locate the first step whose pullback is empty
    for step in range(1, length + 1):
        partial = cons[:step + 1]
        if next(iter(kern.walk([table] * step, root[0], root[1], constraints=partial)), None) is None:
            raise LoopError("pullback along %s is empty after step %d" % (loop, step))
    raise LoopError("pullback along %s survives but F^%d(x) = x has no solution on it"
                    % (loop, length))


def itinerary_holds(F, P, loop, x):
    """``F^i(x)`` lies in the ``i``-th interval of the loop and ``F^len(x) = x``."""
    cons = _constraints(P, loop)
    y = as_rational(x)
    for i, (lo, hi) in enumerate(cons):
        if not lo <= y <= hi:
            return False
        if i < len(loop):
            y = evaluate(F, y)
    return y == as_rational(x)


def find_horseshoe(F, orbit):
    """Intervals ``I, J`` with ``F(I) > I u J`` and ``F(J) > I`` (degree >= 2).

    With ``p = min P`` and ``q = max P``: ``r`` is the last point of the orbit
    of ``p + 1`` inside ``(p, q)``, ``s`` a point of ``P`` above ``r`` mapped
    below ``r``; then ``I = [r, s]`` and ``J = [s, F(r)]``.
    """
    if F.degree < 2:
        raise ValueError("horseshoe construction needs degree >= 2, got %d" % F.degree)
    pts = orbit.points
    for x in pts:
        if iterate(F, x, orbit.period) != x:
            raise ValueError("not a periodic orbit of F")
    p, q = pts[0], pts[-1]
    if not q - p > 1:
        raise ValueError("orbit diameter %s is not > 1" % format_rational(q - p))
    d = F.degree
    # F^j(p+1) = F^j(p) + d^j >= p + d^j, so once d^j > q - p the orbit stays above q
    y = p + 1
    r = None
    j = 0
    while True:
        if y == q:
            raise HorseshoeError("orbit of p + 1 hit max P")
        if p < y < q:
            r = y
        if d**j > q - p:
            break
        y = evaluate(F, y)
        j += 1
    if r is None:
        raise HorseshoeError("orbit of p + 1 never enters (min P, max P)")
    s = None
    x = q
    for _ in range(orbit.period):
        fx = evaluate(F, x)
        if x > r and fx < r:
            s = x
            break
        x = fx
    if s is None:
        raise HorseshoeError("no point of P above r is mapped below r")
    I = (r, s)
    J = (s, evaluate(F, r))
    for name, ok in (("F(I) > I", covers(F, I, I)), ("F(I) > J", covers(F, I, J)),
                     ("F(J) > I", covers(F, J, I))):
        if not ok:
            raise HorseshoeError("covering %s fails for I=%s, J=%s" % (name, I, J))
    return I, J


def horseshoe_loop(length):
    """The loop ``J -> I -> ... -> I`` of the given length (``I -> I`` for 1)."""
    if length == 1:
        return Loop(("I",))
    return Loop(("J",) + ("I",) * (length - 1))


def horseshoe_periodic_point(F, I, J, length):
    """Point of least period ``length`` forced by the horseshoe ``(I, J)``."""
    P = Partition((I, J), ("I", "J"))
    x = periodic_point_from_loop(F, P, horseshoe_loop(length))
    return x, least_period(F, x, length)
