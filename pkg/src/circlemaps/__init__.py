"""Exact toolkit for piecewise-linear liftings of circle maps."""
from ._backend import active as kernel_backend
from .markov import (
    CoverGraph,
    Loop,
    Partition,
    closed_walks,
    covering_graph,
    covers,
    excluded_periods,
    find_horseshoe,
    is_markov,
    loop_count,
    periodic_point_from_loop,
    simple_loops,
)
from .periodic import (
    Orbit,
    PeriodicSolutions,
    circle_periods_set,
    complete_window,
    find_large_orbit,
    mod1_rotation,
    orbit_of,
    periods_set,
    solve_periodic,
)
from .plmap import LiftError, PLLift, compose, evaluate, identity, iterate, make_lift, power, rigid_rotation
from .rotation import Bracket, Exact, forced_periods, lower_map, monotone_rotation_number, rotation_interval, upper_map
from .sharkovskii import sharkovskii_forces

__version__ = "0.1.0"
