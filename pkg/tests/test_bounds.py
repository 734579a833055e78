from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from schlicht_kit.bounds import (
    D6,
    D8,
    OUTSIDE,
    PhiArgs,
    closed_form_quantities,
    lemma1_check,
    phi_lemma2,
    psi_schwarz,
    quantities,
    report,
    report_convex,
    report_S,
)
from schlicht_kit.families import (
    SchwarzPoly,
    convex_from_schwarz,
    convex_lambda,
    halfplane,
    koebe,
    random_schwarz,
    starlike_from_schwarz,
)
from schlicht_kit.scalars import EXACT
from schlicht_kit.series import Series, make_series

F = Fraction
SQRT10 = math.sqrt(10)


def test_koebe_report_exact():
    r = report_S(koebe(0, 8, EXACT), "koebe")
    assert r.passed
    for name in ("|G1| <= 1", "|G2| <= 3/2", "|G3| <= 10/3", "|G2|-|G1| <= 1/2", "|G3|-|G2| <= 11/6"):
        assert r.check(name).margin == 0
    assert r.quantities["G3minusG2"] == F(11, 6)
    assert all(c.theorem for c in r.checks)


def test_identity_reports():
    z = Series.identity(6, EXACT)
    for r in (report_S(z), report_convex(z)):
        assert r.passed
        assert all(v == 0 for v in r.quantities.values())


def test_convex_extremals():
    r = report_convex(convex_lambda(math.sqrt(2 / 5), 8))
    assert abs(r.check("|G2|-|G1| >= -sqrt(10)/10").margin) < 1e-12
    assert abs(r.check("|G3|-|G2| <= 2sqrt(10)/75").margin) < 1e-12
    r0 = report_convex(convex_lambda(0, 8, EXACT))
    assert r0.check("|G2|-|G1| <= 1/6").margin == 0
    rh = report_convex(halfplane(8, EXACT))
    for name in ("|G1| <= 1/2", "|G2| <= 1/4", "|G3| <= 1/6"):
        assert rh.check(name).margin == 0


def test_report_flags_violations():
    f = make_series([0, 1, 3, 0, 0, 0, 0])
    r = report_S(f)
    assert not r.passed
    assert {c.name for c in r.failures()} >= {"|G1| <= 1", "|a3-a2^2| <= 1"}
    for c in r.checks:
        assert c.passed == (c.margin >= -r.tolerance)


def test_report_dispatch_and_json():
    r = report(koebe(0, 8, EXACT), "S", "koebe")
    data = json.loads(json.dumps(r.to_json()))
    assert data["functionId"] == "koebe" and data["pass"]
    assert data["quantities_exact"]["G3"] == "10/3"
    assert {"name", "theorem", "bound", "value", "margin", "pass"} <= set(data["checks"][0])
    assert len(r.csv_rows()) == len(r.checks)
    with pytest.raises(ValueError):
        report(koebe(0, 8), "bogus")
    with pytest.raises(ValueError):
        quantities(koebe(0, 3))


def test_hankel_check_examples():
    assert lemma1_check(convex_lambda(F(1, 2), 6, EXACT)) == (F(1, 4), F(1, 4), True)
    assert lemma1_check(Series.identity(6, EXACT)) == (0, F(1, 3), True)


@pytest.mark.parametrize("seed", range(30))
def test_samples_pass_class_reports(seed):
    w = random_schwarz(1 + seed % 6, seed)
    assert report_S(starlike_from_schwarz(w, 8)).passed
    assert report_convex(convex_from_schwarz(w, 8)).passed


@pytest.mark.parametrize("seed", range(20))
def test_closed_form_and_pipeline_agree(seed):
    f = starlike_from_schwarz(random_schwarz(1 + seed % 6, seed), 8)
    a, b = quantities(f), closed_form_quantities(f)
    assert all(abs(a[k] - b[k]) <= 1e-10 for k in a)


def test_phi_examples():
    assert phi_lemma2(PhiArgs(3, 2)) == (D6, 2)
    region, value = phi_lemma2(PhiArgs(-7 / 5, -2 / 5))
    assert region == D8 and abs(value - 1.6 * math.sqrt(0.4)) < 1e-12
    # (1/12) * Phi gives the convex |G3|-|G2| bound
    assert abs(value / 12 - 2 * SQRT10 / 75) < 1e-12
    assert phi_lemma2(PhiArgs(0, 0)) == (OUTSIDE, None)
    with pytest.raises(ValueError):
        phi_lemma2(PhiArgs(float("nan"), 0))


def test_psi_examples():
    assert psi_schwarz(SchwarzPoly((0, 0, 1)), (1.3, 0.2)) == 1
    assert abs(psi_schwarz(SchwarzPoly((1,)), (-7 / 5, -2 / 5)) - 2 / 5) < 1e-15


def _d6_points(rng, n):
    pts = []
    while len(pts) < n:
        mu = rng.uniform(2, 4) * rng.choice([-1, 1])
        nu = (mu * mu + 8) / 12 + rng.uniform(0, 3)
        pts.append((mu, nu))
    return pts


def _d8_points(rng, n):
    pts = []
    while len(pts) < n:
        mu = rng.uniform(0.5, 2) * rng.choice([-1, 1])
        m1 = abs(mu) + 1
        pts.append((mu, rng.uniform(-2 * m1 / 3, 4 * m1 ** 3 / 27 - m1)))
    return pts


def test_psi_below_phi_on_sampled_regions():
    rng = np.random.default_rng(5)
    points = _d6_points(rng, 20) + _d8_points(rng, 20)
    ws = [random_schwarz(1 + s % 6, 50_000 + s) for s in range(300)]
    for mu, nu in points:
        region, phi = phi_lemma2(PhiArgs(mu, nu))
        assert region in (D6, D8)
        assert max(psi_schwarz(w, (mu, nu)) for w in ws) <= phi + 1e-9


@given(st.floats(-6, 6), st.floats(-6, 6))
def test_phi_region_and_value_consistency(mu, nu):
    region, value = phi_lemma2(PhiArgs(mu, nu))
    if region == OUTSIDE:
        assert value is None
    else:
        assert value >= 0
        # w = z^3 gives Psi = 1, so a sharp bound is at least 1
        assert value >= 1 - 1e-9
