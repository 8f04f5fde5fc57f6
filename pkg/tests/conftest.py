import os
import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from circlemaps import _backend  # noqa: E402
from circlemaps.plmap import PLLift  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

BACKENDS = ["python"] + (["compiled"] if _backend.compiled_kernel is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    previous = _backend.BACKEND
    _backend.use(request.param)
    yield request.param
    _backend.use(previous)


def rationals(lo=-3, hi=3, den=12):
    return st.builds(Fraction, st.integers(lo * den, hi * den), st.just(den))


@st.composite
def lifts(draw, degrees=st.integers(-3, 3), max_inner=4):
    d = draw(degrees)
    t = draw(rationals(-2, 2, 4))
    inner = draw(st.lists(st.integers(1, 23), max_size=max_inner, unique=True))
    xs = [Fraction(0)] + sorted(Fraction(i, 24) for i in inner) + [Fraction(1)]
    ys = [draw(rationals()) for _ in xs[:-1]]
    ys.append(ys[0] + d)
    return PLLift([(x + t, y) for x, y in zip(xs, ys)], d)


# criterion number -> (status, elapsed seconds, limit seconds, title)
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, elapsed, limit, title = ACCEPTANCE[n]
        terminalreporter.write_line("criterion %d: %s  %.2fs (limit %ds)  %s" % (n, status, elapsed, limit, title))
