from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from conftest import normalized_exact, normalized_float
from schlicht_kit.families import convex_from_schwarz, random_schwarz, starlike_from_schwarz
from schlicht_kit.grunsky import (
    ODD,
    WeightVector,
    grunsky_form,
    grunsky_odd_table,
    grunsky_table,
    odd_transform,
    verify_structural,
)
from schlicht_kit.invert import log_coefficients
from schlicht_kit.scalars import EXACT, GaussianRational
from schlicht_kit.series import Series, make_series

KOEBE = make_series(range(12), mode=EXACT)


def starlike(seed, order=12):
    return starlike_from_schwarz(random_schwarz(1 + seed % 6, seed), order)


def convex(seed, order=12):
    return convex_from_schwarz(random_schwarz(1 + seed % 6, seed + 7000), order)


def test_odd_transform_koebe():
    f2 = odd_transform(make_series(range(7), mode=EXACT))
    assert f2.order == 11
    assert f2.coeffs == tuple(1 if n % 2 else 0 for n in range(12))


def test_odd_transform_identity_and_parity():
    assert odd_transform(Series.identity(4, EXACT)) == Series.identity(7, EXACT)
    with pytest.raises(ValueError):
        odd_transform(make_series([1, 1, 0]))


@given(normalized_exact(5))
def test_odd_transform_even_coefficients_zero(f):
    f2 = odd_transform(f)
    assert all(f2[n] == 0 for n in range(0, f2.order + 1, 2))
    assert f2[1] == 1


def test_koebe_full_table():
    t = grunsky_table(KOEBE)
    assert t.max_index == 5
    for p in range(6):
        for q in range(6):
            if p == q == 0:
                expected = 0
            elif p == 0 or q == 0:
                expected = Fraction(2, p + q)
            else:
                expected = Fraction(-1, p) if p == q else 0
            assert t[p, q] == expected


def test_full_table_precondition():
    with pytest.raises(ValueError):
        grunsky_table(KOEBE, 6)
    with pytest.raises(IndexError):
        grunsky_table(KOEBE)[6, 0]


def test_identity_tables_are_zero():
    z = Series.identity(8, EXACT)
    assert all(v == 0 for row in grunsky_table(z).entries for v in row)
    assert all(v == 0 for row in grunsky_odd_table(z).entries for v in row)


def test_koebe_odd_table():
    t = grunsky_odd_table(KOEBE, 5)
    assert t.parity == ODD
    assert (t[1, 1], t[1, 3], t[3, 3], t[1, 5]) == (1, 0, Fraction(1, 3), 0)
    assert all(t[p, q] == 0 for p in range(6) for q in range(6) if p % 2 == 0 or q % 2 == 0)


def test_odd_table_preconditions():
    with pytest.raises(ValueError):
        grunsky_odd_table(KOEBE, 4)
    with pytest.raises(ValueError):
        grunsky_odd_table(KOEBE, 3)
    with pytest.raises(ValueError):
        grunsky_odd_table(make_series(range(6), mode=EXACT), 5)


@given(normalized_exact(9))
def test_row_zero_is_twice_gamma(f):
    t = grunsky_table(f)
    gam = log_coefficients(f)
    for p in range(1, t.max_index + 1):
        assert t[p, 0] == 2 * gam[p]
    assert t.asymmetry() == 0


@given(normalized_float(11))
def test_float_table_symmetric(f):
    assert grunsky_table(f).asymmetry() <= 1e-12 * max(1.0, max(abs(complex(f[n])) for n in range(12)) ** 3)


def test_koebe_form_equality():
    lhs, rhs = grunsky_form(grunsky_table(KOEBE), WeightVector({1: 1}))
    assert lhs == rhs == 1
    lhs, rhs = grunsky_form(grunsky_odd_table(KOEBE, 5), WeightVector({1: 1}))
    assert lhs == rhs == 1


def test_form_for_identity_is_zero():
    lhs, rhs = grunsky_form(grunsky_table(Series.identity(9, EXACT)), WeightVector({1: 2, 3: GaussianRational(0, 1)}))
    assert lhs == 0 and rhs > 0


def test_form_index_checks():
    t = grunsky_odd_table(KOEBE, 5)
    with pytest.raises(IndexError):
        grunsky_form(t, WeightVector({2: 1}))
    with pytest.raises(IndexError):
        grunsky_form(t, WeightVector({7: 1}))
    with pytest.raises(IndexError):
        grunsky_form(t, WeightVector({1: 1}), Q=0)
    with pytest.raises(ValueError):
        WeightVector({})
    with pytest.raises(ValueError):
        WeightVector({1: 0})
    with pytest.raises(ValueError):
        WeightVector({0: 1})


@pytest.mark.parametrize("seed", range(12))
def test_form_inequality_random_weights(seed):
    rng = np.random.default_rng(seed)
    for f in (starlike(seed), convex(seed)):
        full, odd = grunsky_table(f), grunsky_odd_table(f, 7)
        for _ in range(20):
            xs = rng.standard_normal(5) + 1j * rng.standard_normal(5)
            lhs, rhs = grunsky_form(full, WeightVector({p: xs[p - 1] for p in range(1, 6)}))
            assert lhs <= rhs + 1e-9
            lhs, rhs = grunsky_form(odd, WeightVector({p: xs[p // 2] for p in (1, 3, 5, 7)}))
            assert lhs <= rhs + 1e-9


@pytest.mark.parametrize("seed", range(8))
def test_odd_form_specializations(seed):
    t = grunsky_odd_table(starlike(seed), 5)
    w11, w13, w15, w33, w35 = t[1, 1], t[1, 3], t[1, 5], t[3, 3], t[3, 5]
    assert abs(w11) ** 2 + 3 * abs(w13) ** 2 + 5 * abs(w15) ** 2 <= 1 + 1e-9
    assert abs(w13) ** 2 + 3 * abs(w33) ** 2 + 5 * abs(w35) ** 2 <= Fraction(1, 3) + 1e-9
    x1, x3 = 0.6 - 0.2j, 0.3j
    lhs, rhs = grunsky_form(t, WeightVector({1: x1, 3: x3}))
    direct = sum(q * abs(t[1, q] * x1 + t[3, q] * x3) ** 2 for q in (1, 3, 5))
    assert math.isclose(lhs, direct, abs_tol=1e-12)
    assert math.isclose(rhs, abs(x1) ** 2 + abs(x3) ** 2 / 3)
    assert lhs <= rhs + 1e-9


def test_structural_koebe_exact():
    r = verify_structural(KOEBE)
    assert all(v == 0 for v in r.residuals.values())
    assert r.w13_bound_value == 1 and r.ok
    assert r.omega["w11"] == 1 and r.omega["w33"] == Fraction(1, 3)


def test_structural_identity():
    r = verify_structural(Series.identity(6, EXACT))
    assert r.max_residual == 0 and r.ok


def test_structural_needs_order_six():
    with pytest.raises(ValueError):
        verify_structural(make_series(range(6), mode=EXACT))


@given(normalized_exact(6))
def test_structural_identities_hold_exactly_for_any_series(f):
    r = verify_structural(f)
    assert all(v == 0 for v in r.residuals.values())


@pytest.mark.parametrize("seed", range(10))
def test_structural_samples(seed):
    for f in (starlike(seed), convex(seed)):
        r = verify_structural(f, 1e-9)
        assert r.max_residual <= 1e-9 and r.w13_bound_ok and r.row3_ok
        assert set(r.to_json()["residuals"]) == {"a2", "a3", "a4", "w15"}
