"""Seeded random liftings with optional planted periodic orbits."""
import random
from fractions import Fraction
from math import floor

from .plmap import PLLift, as_rational


class PlantError(ValueError):
    """The planted orbits cannot all be realised by one lifting."""


def _constraints(planted, degree):
    """Fundamental-domain values forced by ``F(x_i) = x_{i+1}`` on each cycle."""
    fixed = {}
    for cycle in planted:
        pts = [as_rational(x) for x in cycle]
        if len(set(pts)) != len(pts):
            raise PlantError("orbit points must be distinct")
        for x, y in zip(pts, pts[1:] + pts[:1]):
            j = floor(x)
            r = x - j
            v = y - degree * j
            if fixed.get(r, v) != v:
                raise PlantError("points congruent mod 1 at %s demand inconsistent values" % r)
            fixed[r] = v
    return fixed


def random_pl_lift(seed, degree, planted=None, extra=3, spread=3, denominator=10):
    """Deterministic random lifting of the given degree.

    ``planted`` is a list of cycles, each a list of points in dynamical
    order; the lifting maps every point to its successor.  ``extra`` random
    anchors are added in ``(0, 1)``; their values deviate from ``degree * x``
    by at most ``spread``.
    """
    rng = random.Random(seed)
    cycles = [] if planted is None else list(planted)
    if cycles and not isinstance(cycles[0], (list, tuple)):
        cycles = [cycles]
    fixed = _constraints(cycles, degree)

    def noise():
        return Fraction(rng.randint(-spread * denominator, spread * denominator), denominator)

    if 0 not in fixed:
        if 1 in fixed:
            fixed[Fraction(0)] = fixed[1] - degree
        else:
            fixed[Fraction(0)] = noise()
    fixed[Fraction(1)] = fixed[Fraction(0)] + degree
    grid = 4 * denominator
    tries = 0
    added = 0
    while added < extra and tries < 100 * (extra + 1):
        tries += 1
        x = Fraction(rng.randint(1, grid - 1), grid)
        if x in fixed:
            continue
        fixed[x] = degree * x + noise()
        added += 1
    return PLLift(sorted(fixed.items()), degree)


def random_large_orbit(rng, n, denominator=20):
    """Cycle of ``n >= 2`` points in ``[0, 2]`` with diameter ``> 1`` and
    pairwise distinct residues mod 1."""
    if n < 2:
        raise ValueError("a large orbit has at least two points")
    while True:
        pts = set()
        residues = set()
        while len(pts) < n:
            x = Fraction(rng.randint(0, 2 * denominator), denominator)
            r = x - floor(x)
            if r in residues:
                continue
            residues.add(r)
            pts.add(x)
        pts = sorted(pts)
        if pts[-1] - pts[0] > 1:
            rng.shuffle(pts)
            return pts


def fuzz_theorem_maps(seed, count, max_period=5, extra=3, degree=1, spread=3):
    """``count`` maps of the given degree with planted large orbits of period ``<= max_period``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_period)
        cycle = random_large_orbit(rng, n)
        out.append((random_pl_lift(rng.randrange(2**32), degree, [cycle], extra=extra, spread=spread), cycle))
    return out
