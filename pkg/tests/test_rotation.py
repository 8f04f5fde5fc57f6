from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from circlemaps.examples import theorem_d1_map
from circlemaps.plmap import evaluate, identity, iterate, make_lift, power, reflect, rigid_rotation
from circlemaps.rotation import (
    Bracket,
    Exact,
    forced_periods,
    format_interval,
    interval_contains,
    lower_map,
    monotone_rotation_number,
    rotation_interval,
    upper_map,
)
from conftest import lifts, rationals
from oracles import brute_forced_periods, float_map, naive_iterate, sampled_inf, sampled_sup

DIP = make_lift([(0, Fr(1, 2)), (Fr(1, 2), 0), (1, Fr(3, 2))], 1)
degree_one = lifts(degrees=st.just(1))


def test_upper_map_identity_and_monotone():
    assert upper_map(identity()) == identity()
    G = make_lift([(0, 0), (Fr(1, 3), Fr(1, 2)), (1, 1)], 1)
    assert upper_map(G) == G
    assert lower_map(G) == G


def test_upper_map_example():
    U = upper_map(DIP)
    assert U == make_lift([(0, Fr(1, 2)), (Fr(2, 3), Fr(1, 2)), (1, Fr(3, 2))], 1)
    for i in range(31):
        x = Fr(i, 10) - 1
        assert evaluate(U, x) == sampled_sup(DIP.anchors, 1, x, samples=300)


def test_lower_map_example():
    L = lower_map(DIP)
    for i in range(31):
        x = Fr(i, 10) - 1
        assert evaluate(L, x) == sampled_inf(DIP.anchors, 1, x, samples=300)
        assert evaluate(L, x) <= evaluate(DIP, x)


def test_degree_checked():
    F = make_lift([(0, 0), (1, 2)], 2)
    for fn in (upper_map, lower_map, rotation_interval, monotone_rotation_number):
        with pytest.raises(ValueError):
            fn(F)


def test_non_monotone_rejected():
    with pytest.raises(ValueError, match="nondecreasing"):
        monotone_rotation_number(DIP)


@given(degree_one)
def test_envelope_properties(F):
    U, L = upper_map(F), lower_map(F)
    assert U.degree == L.degree == 1
    assert U.is_nondecreasing() and L.is_nondecreasing()
    assert lower_map(F) == reflect(upper_map(reflect(F)))
    for i in range(-12, 25):
        x = Fr(i, 12)
        assert evaluate(L, x) <= evaluate(F, x) <= evaluate(U, x)
        assert evaluate(U, x + 1) == evaluate(U, x) + 1


@given(degree_one, st.lists(rationals(-2, 2, 7), min_size=1, max_size=8))
def test_iterate_domination(F, xs):
    U = upper_map(F)
    for x in xs:
        for i in range(1, 6):
            assert iterate(U, x, i) >= iterate(F, x, i)


@given(lifts(degrees=st.just(1), max_inner=2))
def test_envelope_sampled_sup(F):
    U = upper_map(F)
    for i in range(5):
        x = Fr(i, 4)
        assert evaluate(U, x) == sampled_sup(F.anchors, 1, x, samples=120)


def _certificate_holds(G, r):
    p, q = r.value.numerator, r.value.denominator
    P = power(G, q)
    xs, _ = P.table
    vals = [naive_iterate(G.anchors, 1, x, q) - x - p for x in xs]
    assert (min(vals), max(vals)) == r.certificate
    return min(vals) <= 0 <= max(vals)


@pytest.mark.parametrize("q", [1, 2, 3, 5, 7, 12, 29, 50])
def test_rigid_rotations(q, backend):
    for p in range(-q, 2 * q):
        value = Fr(p, q)
        if value.denominator != q:
            continue
        r = monotone_rotation_number(rigid_rotation(value))
        assert isinstance(r, Exact) and r.value == value
        assert _certificate_holds(rigid_rotation(value), r)


def test_bracket_below_bound():
    r = monotone_rotation_number(rigid_rotation(Fr(1, 50)), 10)
    assert isinstance(r, Bracket)
    assert (r.lo, r.hi) == (Fr(1, 51), Fr(2, 99))


@pytest.mark.parametrize("value, Q", [(Fr(1, 50), 10), (Fr(577, 816), 100), (Fr(-1393, 985), 30),
                                      (Fr(355, 113), 50), (Fr(1, 10001), 100)])
def test_bracket_width_and_emptiness(value, Q):
    r = monotone_rotation_number(rigid_rotation(value), Q)
    assert isinstance(r, Bracket)
    assert r.lo < value < r.hi
    assert r.hi - r.lo <= Fr(1, Q * Q)
    for q in range(1, Q + 1):
        for p in range(int(r.lo * q) - 1, int(r.hi * q) + 2):
            assert not r.lo < Fr(p, q) < r.hi


def test_upper_map_of_theorem_map():
    U = upper_map(theorem_d1_map())
    r = monotone_rotation_number(U)
    assert r.is_exact and r.value >= Fr(1, 2)
    assert _certificate_holds(U, r)
    # float iteration average as an independent estimate
    G = float_map(U.anchors, 1)
    import numpy as np
    x = np.array([0.0])
    steps = 100000
    for _ in range(steps):
        x = G(x)
    assert abs(x[0] / steps - float(r.value)) < 1e-4


def test_rotation_interval_examples():
    assert rotation_interval(identity()) == (Exact(Fr(0), (0, 0)), Exact(Fr(0), (0, 0)))
    left, right = rotation_interval(rigid_rotation(Fr(1, 3)))
    assert left.value == right.value == Fr(1, 3)
    bounds = rotation_interval(theorem_d1_map())
    assert interval_contains(bounds, Fr(-1, 2), Fr(1, 2))
    assert format_interval(bounds) == "[-1, 1] exact"
    assert format_interval(rotation_interval(identity())) == "[0, 0] exact"


def test_format_bracket():
    text = format_interval(rotation_interval(rigid_rotation(Fr(1, 50)), 7))
    # (0, 1/49) holds no fraction of denominator <= 7 and has width exactly 1/7**2
    assert text == "[0, 1/49] bracket:7"


def test_forced_periods_examples():
    assert forced_periods(Fr(-1, 2), Fr(1, 2), 10) == set(range(1, 11))
    assert forced_periods(Fr(1, 3), Fr(1, 2), 10) == {5, 7, 8, 9, 10}
    assert forced_periods(0, 0, 10) == set()
    with pytest.raises(ValueError):
        forced_periods(1, 0, 5)


@given(rationals(-2, 2, 13), rationals(0, 1, 17), st.integers(1, 30))
def test_forced_periods_brute_force(a, w, N):
    assert forced_periods(a, a + w, N) == brute_forced_periods(a, a + w, N)
