import random
from fractions import Fraction as Fr

import pytest

from circlemaps.examples import (
    degree_zero_arrows,
    degree_zero_chain,
    degree_zero_odd_loops,
    example_degree_zero,
    theorem_d2_map,
)
from circlemaps.markov import (
    CoverGraph,
    HorseshoeError,
    Loop,
    LoopError,
    Partition,
    closed_walks,
    covering_graph,
    covers,
    excluded_periods,
    find_horseshoe,
    horseshoe_loop,
    horseshoe_periodic_point,
    is_markov,
    itinerary_holds,
    loop_count,
    periodic_point_from_loop,
    simple_loops,
)
from circlemaps.periodic import Orbit, least_period
from circlemaps.plmap import evaluate, identity, iterate, make_lift
from oracles import closed_walks_dfs, primitive_walks_dfs

# the arrow list for p = 3, written out by hand from the example
P3_ARROWS = {
    ("I_0", "I_0"), ("I_0", "I_1"), ("I_1", "I_2"), ("I_2", "I'_3"), ("I_2", "I_3"), ("I'_3", "I_0"),
    ("I_0", "J_1"), ("J_1", "J_2"), ("J_2", "J'_3"), ("J_2", "J_3"), ("J'_3", "I_0"),
    ("I_3", "J_1"), ("I_3", "J_3"), ("I_3", "J'_3"), ("I_3", "I_2"),
    ("J_3", "I_1"), ("J_3", "I_3"), ("J_3", "I'_3"), ("J_3", "J_2"),
}
P3_LOOPS = [
    ("I_0", "I_1", "I_2", "I'_3", "I_0"),
    ("I_0", "I_1", "I_2", "I_3", "J'_3"),
    ("I_0", "J_1", "J_2", "J'_3", "I_0"),
    ("I_0", "J_1", "J_2", "J_3", "I'_3"),
]


def graph(adjacency, labels=None):
    labels = labels or tuple("v%d" % i for i in range(len(adjacency)))
    return CoverGraph(tuple(labels), tuple(tuple(r) for r in adjacency), ())


def rotations(word):
    return {tuple(word[r:] + word[:r]) for r in range(len(word))}


def test_partition_validation():
    with pytest.raises(ValueError, match="adjacent"):
        Partition(((0, 1), (2, 3)), ("A", "B"))
    with pytest.raises(ValueError, match="degenerate"):
        Partition(((0, 0), (0, 1)), ("A", "B"))
    with pytest.raises(ValueError, match="distinct"):
        Partition(((0, 1), (1, 2)), ("A", "A"))
    P = Partition.from_labelled([("B", 1, 2), ("A", 0, 1)])
    assert P.labels == ("A", "B") and P.endpoints() == [0, 1, 2]


def test_example_zero_p3_arrows(backend):
    F, orbit, P = example_degree_zero(3)
    assert P.endpoints() == [Fr(k, 8) for k in range(10)]
    G = covering_graph(F, P)
    assert set(G.arrows()) == P3_ARROWS == degree_zero_arrows(3)
    assert G.arrow_count() == 19
    assert is_markov(F, P)
    for (lab, img), (lo, hi) in zip(zip(G.labels, G.images), P.intervals):
        for J, target in zip(G.labels, P.intervals):
            assert covers(F, (lo, hi), target) == ((lab, J) in P3_ARROWS)


def test_chain_names():
    assert degree_zero_chain(3) == ["x0", "z0-1", "x3", "z2", "x1", "z1", "x2", "z3", "x0+1", "z0"]


def test_coordinate_independence():
    coords = [0, Fr(1, 20), Fr(1, 5), Fr(1, 3), Fr(2, 5), Fr(1, 2), Fr(3, 5), Fr(4, 5), 1, Fr(21, 20)]
    F, orbit, P = example_degree_zero(3, coords)
    assert set(covering_graph(F, P).arrows()) == P3_ARROWS
    assert is_markov(F, P)
    with pytest.raises(ValueError):
        example_degree_zero(3, coords[:2] + coords[3:4] + coords[2:3] + coords[4:])
    with pytest.raises(ValueError):
        example_degree_zero(4)


@pytest.mark.parametrize("p", [5, 7, 9])
def test_example_zero_larger_p(p):
    F, orbit, P = example_degree_zero(p)
    assert set(covering_graph(F, P).arrows()) == degree_zero_arrows(p)
    assert len(degree_zero_arrows(p)) == 4 * p + 7


def test_simple_covering_graphs():
    half = Partition(((0, Fr(1, 2)), (Fr(1, 2), 1)), ("I", "J"))
    assert covering_graph(identity(), half).arrows() == [("I", "I"), ("J", "J")]
    tent = make_lift([(0, 0), (Fr(1, 4), 1), (Fr(1, 2), 0), (1, 1)], 1)
    G = covering_graph(tent, half)
    assert [a for a in G.arrows() if a[0] == "I"] == [("I", "I"), ("I", "J")]
    assert G.report().splitlines()[0] == "I -> I"


def test_covers_examples():
    assert covers(identity(), (0, 1), (0, 1))
    assert not covers(identity(), (0, Fr(1, 2)), (Fr(1, 2), 1))
    F = theorem_d2_map()
    I, J = find_horseshoe(F, Orbit((0, Fr(3, 2))))
    assert covers(F, I, I) and covers(F, I, J) and covers(F, J, I)


def test_loop_counts():
    single = graph([[1]])
    assert [closed_walks(single, n) for n in range(1, 6)] == [1] * 5
    assert [loop_count(single, n) for n in range(1, 6)] == [1, 0, 0, 0, 0]
    F, orbit, P = example_degree_zero(3)
    G = covering_graph(F, P)
    assert loop_count(G, 1) == 1
    assert loop_count(G, 3) == 0
    assert closed_walks(G, 3) == 1  # I_0 -> I_0 -> I_0 -> I_0
    with pytest.raises(ValueError):
        loop_count(G, 0)


@pytest.mark.parametrize("seed", range(12))
def test_walk_counts_against_enumeration(seed):
    rng = random.Random(seed)
    size = rng.randint(1, 12)
    density = rng.choice([0.15, 0.3, 0.5])
    A = [[int(rng.random() < density) for _ in range(size)] for _ in range(size)]
    G = graph(A)
    for n in range(1, 7 if size <= 6 else 5):
        assert closed_walks(G, n) == closed_walks_dfs(A, n)
        assert loop_count(G, n) == primitive_walks_dfs(A, n)
    # each rotation class of a non-repetitive loop of length n has n roots
    loops = simple_loops(G, 5)
    for n in range(1, 6):
        assert n * sum(1 for lp in loops if len(lp) == n) == loop_count(G, n)


def test_simple_loops_examples():
    assert [lp.vertices for lp in simple_loops(graph([[1]]), 3)] == [("v0",)]
    assert [lp.vertices for lp in simple_loops(graph([[0, 1], [1, 0]]), 4)] == [("v0", "v1")]
    F, orbit, P = example_degree_zero(3)
    G = covering_graph(F, P)
    odd = [lp for lp in simple_loops(G, 5) if 1 < len(lp) and len(lp) % 2]
    assert len(odd) == 4 and {len(lp) for lp in odd} == {5}
    found = [lp.vertices for lp in odd]
    for stated in P3_LOOPS:
        assert sum(1 for f in found if f in rotations(stated)) == 1
    assert {tuple(v) for v in degree_zero_odd_loops(3)} == set(P3_LOOPS)
    assert str(Loop(("A", "B"))) == "A -> B -> A"


def test_vertex_simple_cycles():
    G = graph([[1, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert [lp.vertices for lp in simple_loops(G, 6, vertex_simple=True)] == [("v0",), ("v0", "v1", "v2")]
    assert len(simple_loops(G, 6)) > 2


def test_excluded_periods_examples():
    for p, expected in ((3, {3}), (5, {3, 5})):
        F, orbit, P = example_degree_zero(p)
        assert expected <= excluded_periods(covering_graph(F, P), 10)
    assert excluded_periods(graph([[1, 1], [1, 1]]), 5) == set()


def test_loop_pullback_identity():
    P = Partition(((0, 1),), ("I",))
    x = periodic_point_from_loop(identity(), P, Loop(("I",)))
    assert evaluate(identity(), x) == x and 0 <= x <= 1


def test_loop_pullback_fixed_point(backend):
    F, orbit, P = example_degree_zero(3)
    x = periodic_point_from_loop(F, P, Loop(("I_0",)))
    assert evaluate(F, x) == x
    lo, hi = P.interval("I_0")
    assert lo <= x <= hi
    for stated in P3_LOOPS:
        loop = Loop(stated)
        y = periodic_point_from_loop(F, P, loop)
        assert itinerary_holds(F, P, loop, y)
        assert least_period(F, y, 5) == 5


def test_loop_pullback_failure():
    F, orbit, P = example_degree_zero(3)
    with pytest.raises(LoopError, match="step 1"):
        periodic_point_from_loop(F, P, Loop(("I_1", "I_0")))


def test_horseshoe(backend):
    F = theorem_d2_map()
    I, J = find_horseshoe(F, Orbit((0, Fr(3, 2))))
    assert I[1] == J[0]
    x = periodic_point_from_loop(F, Partition((I, J), ("I", "J")), Loop(("J", "I", "I")))
    assert iterate(F, x, 3) == x and least_period(F, x, 3) == 3
    for length in range(1, 9):
        x, lp = horseshoe_periodic_point(F, I, J, length)
        assert lp == length
        assert itinerary_holds(F, Partition((I, J), ("I", "J")), horseshoe_loop(length), x)


def test_horseshoe_preconditions():
    doubling = make_lift([(0, 0), (1, 2)], 2)
    with pytest.raises(ValueError):
        find_horseshoe(doubling, Orbit((Fr(0),)))
    with pytest.raises(ValueError):
        find_horseshoe(make_lift([(0, Fr(6, 5)), (Fr(1, 5), -1), (1, Fr(11, 5))], 1), Orbit((0, Fr(6, 5))))
    with pytest.raises(ValueError, match="not a periodic orbit"):
        find_horseshoe(theorem_d2_map(), Orbit((0, Fr(7, 5))))
    assert issubclass(HorseshoeError, RuntimeError)
