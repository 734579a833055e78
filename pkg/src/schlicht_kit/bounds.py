"""Bound checkers for the inverse logarithmic coefficients on the univalent and convex classes.

Class membership is provenance: the caller asserts which class a function
belongs to by choosing :func:`report_S` or :func:`report_convex`.  Nothing
here tries to decide univalence from a truncated series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .invert import CoeffTriple, closed_form_Gamma, inverse_log_coefficients
from .scalars import DEFAULT_TOLERANCE, modulus, modulus2
from .series import Series

SQRT2_HALF = math.sqrt(2) / 2
SQRT10_TENTH = math.sqrt(10) / 10
TWO_SQRT10_75 = 2 * math.sqrt(10) / 75

UPPER = "upper"
LOWER = "lower"

# functional names shared with the extremal search and the CLI
G1, G2, G3 = "G1", "G2", "G3"
G2_MINUS_G1 = "G2minusG1"
G3_MINUS_G2 = "G3minusG2"
A3_MINUS_A2SQ = "a3minusa2sq"
A2 = "a2"
FUNCTIONALS = (G1, G2, G3, G2_MINUS_G1, G3_MINUS_G2, A3_MINUS_A2SQ, A2)

# theorem labels carried by every check
S_MODULI = "S: moduli of inverse log coefficients"
S_DIFF_21 = "S: |G2|-|G1| two-sided bound"
S_DIFF_32 = "S: |G3|-|G2| upper bound"
S_HANKEL = "S: |a3-a2^2| <= 1"
C_MODULI = "convex: moduli of inverse log coefficients"
C_DIFF_21 = "convex: |G2|-|G1| two-sided bound"
C_DIFF_32 = "convex: |G3|-|G2| upper bound"
C_HANKEL = "convex: |a3-a2^2| <= (1-|a2|^2)/3"


@dataclass(frozen=True)
class Check:
    name: str
    theorem: str
    kind: str
    bound: object
    value: object
    margin: object
    passed: bool

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "theorem": self.theorem,
            "kind": self.kind,
            "bound": float(self.bound),
            "value": float(self.value),
            "margin": float(self.margin),
            "pass": self.passed,
        }


def _check(name, theorem, kind, bound, value, tolerance) -> Check:
    margin = bound - value if kind == UPPER else value - bound
    return Check(name, theorem, kind, bound, value, margin, bool(margin >= -tolerance))


@dataclass(frozen=True)
class BoundReport:
    function_id: str
    quantities: dict
    checks: list = field(default_factory=list)
    function_class: str = "S"
    tolerance: float = DEFAULT_TOLERANCE
    mode: str = "float"

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        out = {
            "functionId": self.function_id,
            "class": self.function_class,
            "mode": self.mode,
            "tolerance": self.tolerance,
            "quantities": {k: float(v) for k, v in self.quantities.items()},
            "checks": [c.to_json() for c in self.checks],
            "pass": self.passed,
        }
        exact = {k: str(v) for k, v in self.quantities.items() if isinstance(v, Fraction)}
        if exact:
            out["quantities_exact"] = exact
        return out

    def csv_rows(self) -> list:
        return [
            [self.function_id, c.name, float(c.value), float(c.bound), float(c.margin), c.passed]
            for c in self.checks
        ]


def _from_gammas(g, a2, a3) -> dict:
    m1, m2, m3 = (modulus(x) for x in g)
    return {
        G1: m1,
        G2: m2,
        G3: m3,
        G2_MINUS_G1: m2 - m1,
        G3_MINUS_G2: m3 - m2,
        A3_MINUS_A2SQ: modulus(a3 - a2 * a2),
        A2: modulus(a2),
    }


def quantities(f: Series) -> dict:
    """Named functionals computed through reversion and the series logarithm."""
    if f.order < 4:
        raise ValueError(f"need order >= 4 (got {f.order})")
    gam = inverse_log_coefficients(f)
    return _from_gammas((gam[1], gam[2], gam[3]), f.coeffs[2], f.coeffs[3])


def closed_form_quantities(f: Series) -> dict:
    """Same functionals from the algebraic formulas in ``a_2, a_3, a_4``."""
    t = CoeffTriple.from_series(f)
    return _from_gammas(closed_form_Gamma(t), t.a2, t.a3)


def report_S(f: Series, function_id: str = "", tolerance: float = DEFAULT_TOLERANCE) -> BoundReport:
    """Every bound valid on the normalized univalent class."""
    q = quantities(f)
    checks = [
        _check("|G1| <= 1", S_MODULI, UPPER, Fraction(1), q[G1], tolerance),
        _check("|G2| <= 3/2", S_MODULI, UPPER, Fraction(3, 2), q[G2], tolerance),
        _check("|G3| <= 10/3", S_MODULI, UPPER, Fraction(10, 3), q[G3], tolerance),
        _check("|G2|-|G1| >= -sqrt(2)/2", S_DIFF_21, LOWER, -SQRT2_HALF, q[G2_MINUS_G1], tolerance),
        _check("|G2|-|G1| <= 1/2", S_DIFF_21, UPPER, Fraction(1, 2), q[G2_MINUS_G1], tolerance),
        _check("|G3|-|G2| <= 11/6", S_DIFF_32, UPPER, Fraction(11, 6), q[G3_MINUS_G2], tolerance),
        _check("|a3-a2^2| <= 1", S_HANKEL, UPPER, Fraction(1), q[A3_MINUS_A2SQ], tolerance),
    ]
    return BoundReport(function_id, q, checks, "S", tolerance, f.mode)


def report_convex(f: Series, function_id: str = "", tolerance: float = DEFAULT_TOLERANCE) -> BoundReport:
    """Every bound valid on the convex class."""
    q = quantities(f)
    value, bound, _ = lemma1_check(f, tolerance)
    checks = [
        _check("|G1| <= 1/2", C_MODULI, UPPER, Fraction(1, 2), q[G1], tolerance),
        _check("|G2| <= 1/4", C_MODULI, UPPER, Fraction(1, 4), q[G2], tolerance),
        _check("|G3| <= 1/6", C_MODULI, UPPER, Fraction(1, 6), q[G3], tolerance),
        _check("|G2|-|G1| >= -sqrt(10)/10", C_DIFF_21, LOWER, -SQRT10_TENTH, q[G2_MINUS_G1], tolerance),
        _check("|G2|-|G1| <= 1/6", C_DIFF_21, UPPER, Fraction(1, 6), q[G2_MINUS_G1], tolerance),
        _check("|G3|-|G2| <= 2sqrt(10)/75", C_DIFF_32, UPPER, TWO_SQRT10_75, q[G3_MINUS_G2], tolerance),
        _check("|a3-a2^2| <= (1-|a2|^2)/3", C_HANKEL, UPPER, bound, value, tolerance),
    ]
    return BoundReport(function_id, q, checks, "convex", tolerance, f.mode)


def report(f: Series, function_class: str, function_id: str = "",
           tolerance: float = DEFAULT_TOLERANCE) -> BoundReport:
    if function_class == "S":
        return report_S(f, function_id, tolerance)
    if function_class == "convex":
        return report_convex(f, function_id, tolerance)
    raise ValueError(f"unknown function class {function_class!r}")


def lemma1_check(f: Series, tolerance: float = DEFAULT_TOLERANCE) -> tuple:
    """``(|a3 - a2^2|, (1 - |a2|^2)/3, passed)``; exact in exact mode when rational."""
    a2, a3 = f.coeffs[2], f.coeffs[3]
    value = modulus(a3 - a2 * a2)
    bound = (1 - modulus2(a2)) / 3
    return value, bound, bool(bound - value >= -tolerance)


# ---------------------------------------------------------------------------
# |c3 + mu c1 c2 + nu c1^3| for Schwarz functions
# ---------------------------------------------------------------------------

D6 = "D6"
D8 = "D8"
OUTSIDE = "outside"
REGION_TOL = 1e-12


class PhiArgs(NamedTuple):
    mu: float
    nu: float


class PhiResult(NamedTuple):
    region: str
    value: float | None


def in_d6(mu: float, nu: float, tol: float = REGION_TOL) -> bool:
    m = abs(mu)
    return 2 - tol <= m <= 4 + tol and nu >= (mu * mu + 8) / 12 - tol


def in_d8(mu: float, nu: float, tol: float = REGION_TOL) -> bool:
    m1 = abs(mu) + 1
    return (0.5 - tol <= abs(mu) <= 2 + tol
            and -2 * m1 / 3 - tol <= nu <= 4 * m1 ** 3 / 27 - m1 + tol)


def phi_lemma2(args) -> PhiResult:
    """Sharp bound ``Phi(mu, nu)`` of ``|c3 + mu c1 c2 + nu c1^3|`` on the two regions handled.

    Points outside both regions report ``"outside"`` with no value.
    """
    mu, nu = float(args[0]), float(args[1])
    if not (math.isfinite(mu) and math.isfinite(nu)):
        raise ValueError("mu and nu must be finite")
    if in_d6(mu, nu):
        return PhiResult(D6, abs(nu))
    if in_d8(mu, nu):
        m1 = abs(mu) + 1
        return PhiResult(D8, (2 / 3) * m1 * math.sqrt(m1 / (3 * (m1 + nu))))
    return PhiResult(OUTSIDE, None)


def psi_schwarz(w, args) -> float:
    """``|c3 + mu c1 c2 + nu c1^3|`` for a Schwarz polynomial (missing coefficients are 0)."""
    mu, nu = args
    c1, c2, c3 = (complex(w.c(k)) for k in (1, 2, 3))
    return abs(c3 + mu * c1 * c2 + nu * c1 ** 3)
