"""The two counterexample families for non-positive degree, and test maps."""
from fractions import Fraction

from .markov import Partition
from .periodic import Orbit
from .plmap import PLLift, as_rational

# degree-one map with the period-2 orbit {0, 6/5}
THEOREM_D1 = [(0, Fraction(6, 5)), (Fraction(1, 5), -1), (1, Fraction(11, 5))]
# degree-two map with the period-2 orbit {0, 3/2}
THEOREM_D2 = [(0, Fraction(3, 2)), (Fraction(1, 2), -2), (1, Fraction(7, 2))]


def theorem_d1_map():
    return PLLift(THEOREM_D1, 1)


def theorem_d2_map():
    return PLLift(THEOREM_D2, 2)


def example_negative_degree(d):
    """Odd lifting of degree ``-d`` whose only periodic points are ``0, +-3/4``.

    On ``[0, 1]`` it is affine between ``(0, 0)``, ``(1/4, 3/4 - d)``,
    ``(3/4, -3/4)`` and ``(1, -d)``.
    """
    if int(d) != d or d < 2:
        raise ValueError("d must be an integer >= 2, got %r" % (d,))
    d = int(d)
    q = Fraction(1, 4)
    return PLLift([(0, 0), (q, 3 * q - d), (3 * q, -3 * q), (1, -d)], -d)


def degree_zero_chain(p):
    """Names of the ordered points ``x_0 < z_0 - 1 < x_p < ... < x_0 + 1 < z_0``."""
    _check_p(p)
    left = []
    for i in range(p, 0, -2):
        left.append("x%d" % i)
        if i - 1 >= 2:
            left.append("z%d" % (i - 1))
    right = []
    for i in range(1, p + 1):
        right.append(("z%d" if i % 2 else "x%d") % i)
    return ["x0", "z0-1"] + left + right + ["x0+1", "z0"]


def _check_p(p):
    if int(p) != p or p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd integer >= 3, got %r" % (p,))


def example_degree_zero(p, coordinates=None):
    """Degree-zero lifting with a large orbit of period ``2p + 2``.

    Returns ``(F, orbit, partition)``.  ``coordinates`` lists the values of
    :func:`degree_zero_chain` in order; by default ``x_0 = 0`` and the points
    are equally spaced with step ``1/(2p + 2)``.
    """
    _check_p(p)
    names = degree_zero_chain(p)
    if coordinates is None:
        h = Fraction(1, 2 * p + 2)
        coordinates = [k * h for k in range(len(names))]
    vals = [as_rational(c) for c in coordinates]
    if len(vals) != len(names):
        raise ValueError("expected %d coordinates, got %d" % (len(names), len(vals)))
    for a, b in zip(vals, vals[1:]):
        if not a < b:
            raise ValueError("coordinates must follow the ordering chain strictly")
    pt = dict(zip(names, vals))
    if pt["x0+1"] != pt["x0"] + 1 or pt["z0-1"] != pt["z0"] - 1:
        raise ValueError("x0+1 and z0-1 must be unit translates of x0 and z0")

    image = {"x%d" % i: "x%d" % (i + 1) for i in range(p)}
    image.update({"z%d" % i: "z%d" % (i + 1) for i in range(p)})
    image["x%d" % p] = "z0"
    image["z%d" % p] = "x0"
    image["z0-1"] = "z1"
    image["x0+1"] = "x1"
    anchors = [(pt[name], pt[image[name]]) for name in names[:-1]]
    F = PLLift(anchors, 0)

    cycle = ["x%d" % i for i in range(p + 1)] + ["z%d" % i for i in range(p + 1)]
    orbit = Orbit(tuple(pt[name] for name in cycle))

    def hull(a, b):
        return (min(pt[a], pt[b]), max(pt[a], pt[b]))

    items = [("I_0", *hull("x1", "z1"))]
    for i in range(1, p):
        items.append(("I_%d" % i, *hull("x%d" % i, "z%d" % (i + 1))))
        items.append(("J_%d" % i, *hull("z%d" % i, "x%d" % (i + 1))))
    items.append(("I_%d" % p, *hull("z0-1", "x%d" % p)))
    items.append(("J_%d" % p, *hull("z%d" % p, "x0+1")))
    items.append(("I'_%d" % p, *hull("x0", "z0-1")))
    items.append(("J'_%d" % p, *hull("x0+1", "z0")))
    return F, orbit, Partition.from_labelled(items)


def degree_zero_arrows(p):
    """The arrow list stated for the degree-zero example, as label pairs."""
    _check_p(p)
    arrows = {("I_0", "I_0"), ("I_0", "I_1"), ("I_0", "J_1")}
    for X in ("I", "J"):
        for i in range(1, p - 1):
            arrows.add(("%s_%d" % (X, i), "%s_%d" % (X, i + 1)))
        arrows.add(("%s_%d" % (X, p - 1), "%s'_%d" % (X, p)))
        arrows.add(("%s_%d" % (X, p - 1), "%s_%d" % (X, p)))
        arrows.add(("%s'_%d" % (X, p), "I_0"))
    ip, jp = "I_%d" % p, "J_%d" % p
    for i in range(1, p + 1, 2):
        arrows.add((ip, "J_%d" % i))
        arrows.add((jp, "I_%d" % i))
    for i in range(2, p, 2):
        arrows.add((ip, "I_%d" % i))
        arrows.add((jp, "J_%d" % i))
    arrows.add((ip, "J'_%d" % p))
    arrows.add((jp, "I'_%d" % p))
    return arrows


def degree_zero_odd_loops(p):
    """The four shortest odd loops (length ``p + 2``) listed for the example."""
    _check_p(p)
    ichain = tuple("I_%d" % i for i in range(p))
    jchain = ("I_0",) + tuple("J_%d" % i for i in range(1, p))
    return [
        ichain + ("I'_%d" % p, "I_0"),
        ichain + ("I_%d" % p, "J'_%d" % p),
        jchain + ("J'_%d" % p, "I_0"),
        jchain + ("J_%d" % p, "I'_%d" % p),
    ]


# degree-one map carrying the period-2 orbits {0, 3/5} and {1/2, 23/20}
CHAINED = [(0, Fraction(3, 5)), (Fraction(3, 20), Fraction(-1, 2)), (Fraction(1, 2), Fraction(23, 20)),
           (Fraction(3, 5), 0), (1, Fraction(8, 5))]


def chained_map():
    """Returns ``(F, orbits)``; neither orbit is large but their hulls overlap."""
    F = PLLift(CHAINED, 1)
    return F, [Orbit((Fraction(0), Fraction(3, 5))), Orbit((Fraction(1, 2), Fraction(23, 20)))]
