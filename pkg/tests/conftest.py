import random

import hypothesis
from hypothesis import strategies as st

from elimdeg.geometry import convex_hull
from elimdeg.polynomial import Polynomial

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("thorough", deadline=None, max_examples=400)
hypothesis.settings.load_profile("default")

coords = st.integers(min_value=0, max_value=10)
points = st.tuples(coords, coords)


@st.composite
def lattice_polygons(draw, min_points=1, max_points=12, full=False):
    """Hull of up to 12 lattice points in [0,10]^2; ``full`` forces positive area."""
    pts = draw(st.lists(points, min_size=min_points, max_size=max_points))
    P = convex_hull(pts)
    if full:
        hypothesis.assume(P.dimension == 2)
    return P


@st.composite
def polynomials(draw, max_deg=4, max_terms=6, bound=9, constant=None):
    exps = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg))
    nonzero = st.integers(-bound, bound).filter(bool)
    terms = draw(st.dictionaries(exps, nonzero, min_size=1, max_size=max_terms))
    if constant is True:
        terms[(0, 0)] = draw(nonzero)
    elif constant is False:
        terms.pop((0, 0), None)
        hypothesis.assume(terms)
    return Polynomial(terms)


def random_polygon(rng: random.Random, max_points=12):
    pts = [(rng.randint(0, 10), rng.randint(0, 10)) for _ in range(rng.randint(1, max_points))]
    return convex_hull(pts)


def random_polynomial(rng: random.Random, max_deg=4, max_terms=6, bound=9, constant=True):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[(rng.randint(0, max_deg), rng.randint(0, max_deg))] = rng.choice(
            [v for v in range(-bound, bound + 1) if v]
        )
    if constant:
        terms[(0, 0)] = rng.randint(1, bound)
    return Polynomial(terms)


# one summary line per acceptance criterion

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _ACCEPTANCE[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        verdict = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
