from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import exact_series, normalized_exact, normalized_float
from schlicht_kit.scalars import EXACT, FLOAT, GaussianRational
from schlicht_kit.series import (
    Series,
    algebra,
    bi_exp,
    bi_log,
    compose,
    derivative,
    difference_quotient,
    div,
    elementary,
    exp0,
    integrate,
    log1,
    make_biseries,
    make_series,
    mul,
    power,
    series_from_json,
    series_to_json,
    sqrt1,
    substitute_power,
)


def coeffs(f):
    return [complex(c) for c in f.coeffs]


def close(f, g, tol=1e-12):
    return f.order == g.order and all(abs(complex(a) - complex(b)) <= tol for a, b in zip(f, g))


# -- construction ----------------------------------------------------------

def test_make_series_echo():
    f = make_series([1, 2, 3], order=2)
    assert f.order == 2 and coeffs(f) == [1, 2, 3]


def test_make_series_errors():
    with pytest.raises(ValueError, match="empty coefficient sequence"):
        make_series([])
    with pytest.raises(ValueError, match="non-finite scalar"):
        make_series([0, 1, float("nan")])
    with pytest.raises(ValueError):
        make_series([1, 2], order=3)
    with pytest.raises(ValueError):
        make_series([0.5], mode=EXACT)


def test_index_beyond_order_refused():
    f = make_series([0, 1, 2])
    with pytest.raises(IndexError):
        f[3]


# -- algebra ---------------------------------------------------------------

def test_mul_binomial():
    f = make_series([1, 1, 0], mode=EXACT)
    assert mul(f, f).coeffs == (1, 2, 1)


def test_div_geometric():
    n = 7
    g = div(Series.constant(1, n, EXACT), make_series([1, -1] + [0] * (n - 1), mode=EXACT))
    assert g.coeffs == tuple([1] * (n + 1))


def test_mul_truncates():
    f = make_series([0, 1, 1, 0], mode=EXACT)
    assert mul(f, f).coeffs == (0, 0, 1, 2)


def test_result_order_is_min():
    a = make_series([1, 2, 3, 4])
    b = make_series([1, 1])
    assert (a + b).order == 1 and mul(a, b).order == 1


def test_div_needs_unit_constant():
    with pytest.raises(ZeroDivisionError):
        div(make_series([1, 1]), make_series([0, 1]))


def test_algebra_dispatch():
    a = make_series([1, 2, 3], mode=EXACT)
    b = make_series([1, -1, 0], mode=EXACT)
    assert algebra(a, b, "add").coeffs == (2, 1, 3)
    assert algebra(a, b, "mul") == mul(a, b)
    assert algebra(a, None, "scale", Fraction(1, 2)).coeffs == (Fraction(1, 2), 1, Fraction(3, 2))


def test_mixed_modes_rejected():
    with pytest.raises(ValueError):
        make_series([1, 2], mode=EXACT) + make_series([1, 2])


@given(exact_series(5), exact_series(5), exact_series(5))
def test_ring_laws_exact(a, b, c):
    assert mul(a, b) == mul(b, a)
    assert mul(a, b + c) == mul(a, b) + mul(a, c)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


# -- composition -----------------------------------------------------------

def test_compose_example():
    f = make_series([0, 1, 1, 0, 0], mode=EXACT)
    assert compose(f, f).coeffs == (0, 1, 2, 2, 1)


def test_compose_identity_and_precondition():
    f = make_series([3, 1, 2, 5], mode=EXACT)
    assert compose(f, Series.identity(3, EXACT)) == f
    with pytest.raises(ValueError):
        compose(f, make_series([1, 1, 0, 0], mode=EXACT))


@given(exact_series(5), exact_series(5, constant=0), exact_series(5, constant=0))
def test_compose_associative_exact(f, g, h):
    assert compose(f, compose(g, h)) == compose(compose(f, g), h)


# -- calculus and elementary functions -------------------------------------

def test_derivative_and_integral():
    f = make_series([5, 1, 2, 3], mode=EXACT)
    assert derivative(f).coeffs == (1, 4, 9)
    F = integrate(f)
    assert F.order == 4 and F.coeffs == (0, 5, Fraction(1, 2), Fraction(2, 3), Fraction(3, 4))
    assert derivative(integrate(f)) == f


def test_log_mercator():
    n = 8
    g = div(Series.constant(1, n, EXACT), make_series([1, -1] + [0] * (n - 1), mode=EXACT))
    assert log1(g).coeffs == tuple([0] + [Fraction(1, k) for k in range(1, n + 1)])


def test_sqrt_round_trip():
    f = make_series([1, 0, -1, 0, 0, 0, 0], mode=EXACT)
    r = sqrt1(f)
    assert mul(r, r) == f


def test_preconditions():
    with pytest.raises(ValueError):
        log1(make_series([2, 1]))
    with pytest.raises(ValueError):
        exp0(make_series([1, 1]))
    with pytest.raises(ValueError):
        sqrt1(make_series([0, 1]))
    with pytest.raises(ValueError):
        power(make_series([1, 1], mode=EXACT), 0.5)


def test_elementary_dispatch():
    f = make_series([1, 1, 0, 0], mode=EXACT)
    assert elementary(f, "pow", Fraction(1, 2)) == sqrt1(f)
    assert elementary(f, "log1") == log1(f)
    with pytest.raises(ValueError):
        elementary(f, "sin")


def test_power_binomial():
    # (1+z)^(1/2) = 1 + z/2 - z^2/8 + z^3/16
    f = make_series([1, 1, 0, 0], mode=EXACT)
    assert power(f, Fraction(1, 2)).coeffs == (1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16))


def test_substitute_power():
    f = make_series([1, 2, 3], mode=EXACT)
    assert substitute_power(f, 2).coeffs == (1, 0, 2, 0, 3)


@given(exact_series(6, constant=1))
def test_exp_log_round_trip_exact(f):
    assert exp0(log1(f)) == f


@given(normalized_float(8))
def test_exp_log_round_trip_float(g):
    f = make_series([1] + [complex(c) / 4 for c in g.coeffs[1:]])
    assert close(exp0(log1(f)), f, 1e-12)
    r = sqrt1(f)
    assert close(mul(r, r), f, 1e-12)


# -- bivariate ---------------------------------------------------------------

def test_difference_quotient_of_identity():
    b = difference_quotient(Series.identity(5, EXACT))
    assert b[0, 0] == 1
    assert all(v == 0 for (p, q), v in b.items() if (p, q) != (0, 0))


def test_difference_quotient_quadratic():
    a2 = GaussianRational(Fraction(2, 3), 1)
    b = difference_quotient(make_series([0, 1, a2], mode=EXACT), polynomial=True)
    assert b.order == 1
    assert (b[0, 0], b[1, 0], b[0, 1], b[1, 1]) == (1, a2, a2, 0)


def test_difference_quotient_grid_is_determined():
    b = difference_quotient(make_series(range(8), mode=EXACT))
    assert b.order == 3
    with pytest.raises(IndexError):
        b[4, 0]


def test_difference_quotient_koebe_identity():
    # k(t) - k(z) = (t - z)(1 - tz) / ((1 - t)^2 (1 - z)^2): coefficient of t^p z^q is
    # sum over (1 - tz) of (p+1)(q+1) - p q
    n = 13
    b = difference_quotient(make_series(range(n + 1), mode=EXACT))
    for (p, q), v in b.items():
        assert v == (p + 1) * (q + 1) - p * q


@given(normalized_exact(7))
def test_difference_quotient_row_zero(f):
    b = difference_quotient(f)
    row = b.row(0)
    for i in range(b.order + 1):
        assert row[i] == f[i + 1]


def test_bi_log_of_one():
    one = make_biseries([[1, 0], [0, 0]], mode=EXACT)
    assert all(v == 0 for _, v in bi_log(one).items())
    with pytest.raises(ValueError):
        bi_log(make_biseries([[2, 0], [0, 0]], mode=EXACT))


def test_bi_log_koebe():
    w = bi_log(difference_quotient(make_series(range(12), mode=EXACT)))
    for (p, q), v in w.items():
        if p == 0 and q == 0:
            assert v == 0
        elif q == 0 or p == 0:
            assert v == Fraction(2, max(p, q))
        else:
            assert v == (Fraction(-1, p) if p == q else 0)


@given(normalized_float(9))
def test_bi_log_symmetric_and_exp_round_trip(f):
    b = difference_quotient(f)
    w = bi_log(b)
    assert w.asymmetry() <= 1e-12 * max(1.0, max(abs(complex(v)) for _, v in w.items()))
    back = bi_exp(w)
    for (p, q), v in b.items():
        assert abs(complex(back[p, q]) - complex(v)) <= 1e-9 * max(1.0, abs(complex(v)))


@given(normalized_exact(7))
def test_bi_exp_inverts_bi_log_exact(f):
    b = difference_quotient(f)
    assert bi_exp(bi_log(b)) == b


# -- serialization -----------------------------------------------------------

@given(st.one_of(exact_series(4), normalized_float(4)))
def test_json_round_trip(f):
    assert series_from_json(series_to_json(f)) == f


def test_evaluate_polynomial():
    f = make_series([1, 2, 3])
    assert f.evaluate(2) == 1 + 4 + 12
    assert math.isclose(abs(f.evaluate(1j)), abs(1 + 2j - 3))
