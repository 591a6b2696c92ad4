from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from b2dunkl.algebra import Params, VPoly

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[0])):
            terminalreporter.write_line(line)


@pytest.fixture
def report():
    def emit(number, passed, detail):
        line = f"{number} {'PASS' if passed else 'FAIL'} {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed
    return emit


small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 12))


@st.composite
def params_strategy(draw, square=False):
    if square:
        # inside |k0 +/- k1| < 1/2
        k0 = draw(st.builds(Fraction, st.integers(-11, 11), st.just(48)))
        room = Fraction(1, 2) - abs(k0)
        k1 = draw(st.builds(Fraction, st.integers(-100, 100), st.just(101))) * room
        return Params(k0, k1)
    return Params(draw(small_rationals), draw(small_rationals))


@st.composite
def vpoly_strategy(draw, max_degree=4, max_terms=5):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        d = draw(st.integers(0, max_degree))
        a = draw(st.integers(0, d))
        terms[(a, d - a)] = (draw(small_rationals), draw(small_rationals))
    return VPoly(terms)
