"""Compare the pure-Python and compiled kernels on the hot workloads.

    python3 benchmarks/bench_kernel.py [--repeat 3]
"""
import argparse
import time
from fractions import Fraction

from circlemaps import _backend
from circlemaps import examples as E
from circlemaps.periodic import periods_set, solve_periodic
from circlemaps.plmap import power, rigid_rotation
from circlemaps.rotation import monotone_rotation_number, rotation_interval


def rotations():
    for q in range(1, 41):
        for p in range(q):
            if Fraction(p, q).denominator == q:
                monotone_rotation_number(rigid_rotation(Fraction(p, q)))


def negative_solver():
    F = E.example_negative_degree(4)
    for n in range(1, 7):
        solve_periodic(F, n, 0, (-4, 4))


def degree_zero_periods():
    F, orbit, _ = E.example_degree_zero(7)
    periods_set(F, 16, (min(orbit.cycle), max(orbit.cycle)))


def degree_two_power():
    power(E.theorem_d2_map(), 4)


def theorem_interval():
    rotation_interval(E.theorem_d1_map())


WORKLOADS = [rotations, negative_solver, degree_zero_periods, degree_two_power, theorem_interval]


def fresh(fn):
    # kernel tables are cached on each lifting, so workloads build their own maps
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    kernels = ["python"] + (["compiled"] if _backend.compiled_kernel is not None else [])
    print("%-22s" % "workload" + "".join("%12s" % k for k in kernels) + ("%10s" % "speedup" if len(kernels) == 2 else ""))
    for fn in WORKLOADS:
        best = []
        for k in kernels:
            _backend.use(k)
            best.append(min(fresh(fn) for _ in range(args.repeat)))
        row = "%-22s" % fn.__name__ + "".join("%11.3fs" % t for t in best)
        if len(best) == 2:
            row += "%9.1fx" % (best[0] / best[1])
        print(row)


if __name__ == "__main__":
    main()
