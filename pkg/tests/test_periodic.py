from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from circlemaps.examples import example_degree_zero, example_negative_degree, theorem_d1_map
from circlemaps.fuzz import random_pl_lift
from circlemaps.periodic import (
    NotPeriodicError,
    circle_periodic_witness,
    circle_periods_set,
    Orbit,
    check_solution,
    complete_window,
    divisors,
    find_large_orbit,
    least_period,
    mod1_rotation,
    orbit_of,
    periods_set,
    solve_periodic,
)
from circlemaps.plmap import evaluate, identity, iterate, make_lift, rigid_rotation
from conftest import lifts
from oracles import bisection_roots, circle_periods_numeric

NEG = make_lift([(0, 0), (1, -1)], -1)
EX1 = example_negative_degree(4)


def test_rotation_segment():
    sol = solve_periodic(rigid_rotation(Fr(1, 2)), 2, 1)
    assert sol.isolated == [] and sol.segments == [(Fr(0), Fr(1))]
    assert sol.report() == "period 2: 0 isolated, 1 segments"


def test_example_one_period_two(backend):
    sol = solve_periodic(EX1, 2, 0, (-4, 4))
    assert sol.isolated == [Fr(-3, 4), Fr(0), Fr(3, 4)]
    assert sol.segments == []


def test_involution():
    sol = solve_periodic(NEG, 1, 0, (-2, 2))
    assert sol.isolated == [0] and sol.segments == []
    sol2 = solve_periodic(NEG, 2, 0, (-2, 2))
    assert sol2.segments == [(-2, 2)]
    assert periods_set(NEG, 5, (-2, 2)) == {1, 2}


def test_window_required():
    with pytest.raises(ValueError, match="window"):
        solve_periodic(EX1, 1)


def test_periods_sets():
    assert periods_set(theorem_d1_map(), 10) == set(range(1, 11))
    assert periods_set(identity(), 3) == {1}
    assert periods_set(EX1, 6, (-4, 4)) == {1, 2}


def test_orbits():
    o = orbit_of(EX1, Fr(3, 4), 10)
    assert o.points == (Fr(-3, 4), Fr(3, 4)) and o.period == 2 and o.diameter == Fr(3, 2)
    F, orbit, _ = example_degree_zero(3)
    o = orbit_of(F, 0, 20)
    assert o.period == 8 and o.diameter == Fr(9, 8)
    o = orbit_of(identity(), Fr(5, 7), 3)
    assert o.period == 1 and o.diameter == 0
    with pytest.raises(NotPeriodicError):
        orbit_of(rigid_rotation(Fr(1, 3)), 0, 10)
    assert str(orbit_of(EX1, Fr(3, 4), 2)) == "{-3/4, 3/4} period 2 diameter 3/2"


def test_mod1_rotation():
    assert mod1_rotation(rigid_rotation(Fr(1, 2)), 0, 10) == (2, 1, Fr(1, 2))
    assert mod1_rotation(rigid_rotation(Fr(2, 6)), Fr(1, 4), 10) == (3, 1, Fr(1, 3))
    F = theorem_d1_map()
    assert mod1_rotation(F, 0, 10) == (2, 0, 0)
    with pytest.raises(NotPeriodicError):
        mod1_rotation(rigid_rotation(Fr(1, 7)), 0, 5)
    with pytest.raises(ValueError):
        mod1_rotation(EX1, 0, 5)


def test_find_large_orbit():
    o = find_large_orbit(theorem_d1_map(), 5)
    assert o.points == (0, Fr(6, 5)) and o.period == 2
    assert find_large_orbit(identity(), 6) is None
    assert find_large_orbit(EX1, 4, (-4, 4)).points == (Fr(-3, 4), Fr(3, 4))


def test_least_period():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert least_period(EX1, Fr(3, 4), 4) == 2
    with pytest.raises(NotPeriodicError):
        least_period(EX1, Fr(1, 3), 2)


def test_complete_window():
    assert complete_window(theorem_d1_map()) is None
    assert complete_window(EX1) == (Fr(-3, 4), Fr(3, 4))
    F, orbit, _ = example_degree_zero(3)
    assert complete_window(F) == (0, Fr(9, 8))
    with pytest.raises(ValueError):
        complete_window(NEG)


@given(lifts(degrees=st.sampled_from([-3, -2, 2, 3]), max_inner=2))
def test_complete_window_holds_all_fixed_points(F):
    lo, hi = complete_window(F)
    wide = solve_periodic(F, 2, 0, (lo - 3, hi + 3))
    assert all(lo <= x <= hi for x in wide.isolated)
    assert all(lo <= a and b <= hi for a, b in wide.segments)


@given(lifts(degrees=st.integers(-2, 2), max_inner=3), st.integers(1, 3), st.integers(-2, 2))
def test_solutions_recheck(F, n, k):
    window = None if F.degree == 1 else (-2, 2)
    sol = solve_periodic(F, n, k, window)
    for x in sol.isolated:
        assert check_solution(F, x, n, k)
    for a, b in sol.segments:
        for x in (a, b, (a + b) / 2, a + (b - a) / 3):
            assert iterate(F, x, n) == x + k
    items = sorted([(x, x) for x in sol.isolated] + sol.segments)
    for (a, b), (c, d) in zip(items, items[1:]):
        assert b < c


@given(lifts(degrees=st.just(1), max_inner=3), st.integers(1, 3), st.integers(-1, 1))
def test_translation_equivariance(F, n, k):
    base = solve_periodic(F, n, k)
    shifted = solve_periodic(F, n, k, (1, 2))
    assert [x + 1 for x in base.isolated] == [x for x in shifted.isolated if x < 2]


@given(lifts(degrees=st.integers(-2, 2), max_inner=3), st.integers(1, 4))
def test_orbit_minimality(F, n):
    window = None if F.degree == 1 else (-2, 2)
    for x in solve_periodic(F, n, 0, window).isolated:
        o = orbit_of(F, x, n)
        for i in divisors(o.period)[:-1]:
            assert iterate(F, x, i) != x
        assert len(set(o.cycle)) == o.period


@pytest.mark.parametrize("seed", range(6))
def test_against_bisection(seed, backend):
    d = [1, 0, 2, -1, 1, -2][seed]
    F = random_pl_lift(500 + seed, d, extra=3, spread=1, denominator=53)
    for n in range(1, 4):
        if d == 1:
            sol, roots = solve_periodic(F, n), bisection_roots(F.anchors, d, n, 0.0, 1.0)
            roots = [r for r in roots if r < 1 - 1e-12]
        else:
            sol, roots = solve_periodic(F, n, 0, (-2, 2)), bisection_roots(F.anchors, d, n, -2.0, 2.0)
        assert not sol.segments
        assert len(sol.isolated) == len(roots)
        assert all(abs(float(x) - r) < 1e-9 for x, r in zip(sol.isolated, roots))


def test_orbit_type():
    o = Orbit((Fr(1), Fr(0)))
    assert o.points == (0, 1) and 0 in o and o.diameter == 1
    assert evaluate(theorem_d1_map(), 0) == Fr(6, 5)


def test_circle_periods_doubling():
    F = make_lift([(0, 0), (1, 2)], 2)
    assert periods_set(F, 6, (-3, 3)) == {1}
    assert circle_periods_set(F, 6) == set(range(1, 7))
    x = circle_periodic_witness(F, 5)
    assert 0 <= x < 1 and (iterate(F, x, 5) - x).denominator == 1
    assert all((iterate(F, x, i) - x).denominator != 1 for i in range(1, 5))


def test_circle_periods_segments():
    assert circle_periods_set(rigid_rotation(Fr(2, 5)), 7) == {5}
    assert circle_periods_set(identity(), 4) == {1}
    assert circle_periods_set(rigid_rotation(Fr(1, 2)), 4) == {2}


@pytest.mark.parametrize("seed", range(5))
def test_circle_periods_against_oracle(seed, backend):
    d = [2, 2, -2, 3, 1][seed]
    F = random_pl_lift(700 + seed, d, extra=3, spread=1, denominator=41)
    assert circle_periods_set(F, 4) == circle_periods_numeric(F.anchors, d, 4)


@pytest.mark.parametrize("anchors, expected", [
    ([(0, Fr(1, 3)), (Fr(1, 2), Fr(3, 4)), (1, Fr(4, 3))], set()),
    ([(0, Fr(1, 10)), (Fr(1, 3), Fr(1, 5)), (Fr(2, 3), Fr(6, 5)), (1, Fr(11, 10))], {1}),
    ([(0, Fr(2, 5)), (Fr(1, 4), Fr(1, 5)), (Fr(3, 5), Fr(11, 10)), (1, Fr(7, 5))], {1, 3, 4, 5, 6}),
])
def test_circle_periods_degree_one(anchors, expected, backend):
    assert circle_periods_set(make_lift(anchors, 1), 6) == expected
    assert circle_periods_numeric(anchors, 1, 6) == expected
