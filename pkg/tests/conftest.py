from __future__ import annotations

from fractions import Fraction

from hypothesis import settings, strategies as st

from schlicht_kit.scalars import EXACT, FLOAT, GaussianRational
from schlicht_kit.series import make_series

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fraction = st.fractions(min_value=-3, max_value=3, max_denominator=6)
gaussian = st.builds(GaussianRational, small_fraction, small_fraction)
small_complex = st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False)


@st.composite
def exact_series(draw, order=6, constant=None):
    coeffs = draw(st.lists(gaussian, min_size=order + 1, max_size=order + 1))
    if constant is not None:
        coeffs[0] = GaussianRational(Fraction(constant))
    return make_series(coeffs, mode=EXACT)


@st.composite
def normalized_exact(draw, order=6):
    tail = draw(st.lists(gaussian, min_size=order - 1, max_size=order - 1))
    return make_series([0, 1] + tail, mode=EXACT)


@st.composite
def normalized_float(draw, order=8):
    tail = []
    for n in range(2, order + 1):
        tail.append(draw(st.complex_numbers(max_magnitude=n, allow_nan=False, allow_infinity=False)))
    return make_series([0, 1] + tail, mode=FLOAT)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=lambda k: int(k[1:])):
            terminalreporter.write_line(RESULTS[key])
