"""Seeded sample generators and the full verification battery run by ``schlicht-kit suite``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .bounds import (
    G2_MINUS_G1,
    G3_MINUS_G2,
    TWO_SQRT10_75,
    SQRT10_TENTH,
    closed_form_quantities,
    lemma1_check,
    phi_lemma2,
    psi_schwarz,
    quantities,
    report_convex,
    report_S,
)
from .extremal import MAXIMIZE, MINIMIZE, SearchSpec, grid_refine_search, random_restart_search
from .families import (
    convex_from_schwarz,
    convex_lambda,
    halfplane,
    koebe,
    random_schwarz,
    starlike_from_schwarz,
)
from .grunsky import WeightVector, grunsky_form, grunsky_odd_table, grunsky_table, verify_structural
from .invert import (
    CoeffTriple,
    closed_form_Gamma,
    inverse_log_coefficients,
    log_coefficients,
    revert,
)
from .scalars import EXACT, FLOAT, GaussianRational, modulus
from .series import Series, compose, make_series

ORDER = 12
CONVEX_SEED_OFFSET = 100_000
PHI_SEED_OFFSET = 200_000
REVERSION_SEED_OFFSET = 300_000
WEIGHT_SEED_OFFSET = 400_000


@dataclass(frozen=True)
class Sample:
    label: str
    series: Series
    function_class: str


def starlike_samples(count: int = 1000, seed: int = 0, order: int = ORDER) -> list:
    out = []
    for s in range(count):
        w = random_schwarz(1 + s % 6, seed + s)
        out.append(Sample(f"starlike[seed={seed + s},K={1 + s % 6}]", starlike_from_schwarz(w, order), "S"))
    return out


def koebe_rotations(count: int = 100, order: int = ORDER) -> list:
    return [Sample(f"koebe[theta=2pi*{j}/{count}]", koebe(2 * math.pi * j / count, order), "S")
            for j in range(count)]


def convex_samples(count: int = 1000, seed: int = 0, order: int = ORDER) -> list:
    out = []
    for s in range(count):
        w = random_schwarz(1 + s % 6, seed + CONVEX_SEED_OFFSET + s)
        out.append(Sample(f"convex[seed={seed + CONVEX_SEED_OFFSET + s},K={1 + s % 6}]",
                          convex_from_schwarz(w, order), "convex"))
    return out


def lambda_grid(count: int = 101, order: int = ORDER) -> list:
    return [Sample(f"f_lambda[{j}/{count - 1}]", convex_lambda(j / (count - 1), order), "convex")
            for j in range(count)]


def random_normalized_series(seed: int, order: int = ORDER, denominator: int = 8) -> Series:
    """Exact normalized series with Gaussian-rational ``c_n``, ``|c_n| <= n``."""
    rng = np.random.default_rng(seed)
    coeffs = [0, 1]
    for n in range(2, order + 1):
        while True:
            re, im = (int(v) for v in rng.integers(-denominator, denominator + 1, size=2))
            if re * re + im * im <= denominator * denominator:
                break
        coeffs.append(GaussianRational(Fraction(n * re, denominator), Fraction(n * im, denominator)))
    return make_series(coeffs, mode=EXACT)


def random_weights(rng: np.random.Generator, indices: list) -> WeightVector:
    """Random complex weights on a random nonempty subset of ``indices``."""
    while True:
        mask = rng.random(len(indices)) < 0.6
        if mask.any():
            break
    vals = rng.standard_normal(len(indices)) + 1j * rng.standard_normal(len(indices))
    return WeightVector({p: complex(v) for p, v, m in zip(indices, vals, mask) if m})


@dataclass
class CriterionResult:
    key: str
    title: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"criterion": self.key, "title": self.title, "pass": self.passed, "details": self.details}

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.key} {self.title}"


class Battery:
    """Runs every criterion; samples are built once and shared."""

    def __init__(self, seed: int = 0, tolerance: float = 1e-9):
        self.seed = seed
        self.tol = tolerance

    @cached_property
    def s_samples(self) -> list:
        return starlike_samples(1000, self.seed) + koebe_rotations(100)

    @cached_property
    def c_samples(self) -> list:
        return convex_samples(1000, self.seed) + lambda_grid(101)

    # -- criteria ---------------------------------------------------------
    def c1_koebe_moduli(self) -> CriterionResult:
        expected = (Fraction(1), Fraction(3, 2), Fraction(10, 3))
        k_exact = koebe(0, ORDER, EXACT)
        series_exact = inverse_log_coefficients(k_exact).moduli()[:3]
        closed_exact = tuple(modulus(g) for g in closed_form_Gamma(CoeffTriple.from_series(k_exact)))
        k_float = koebe(0.0, ORDER, FLOAT)
        series_float = inverse_log_coefficients(k_float).moduli()[:3]
        closed_float = tuple(modulus(g) for g in closed_form_Gamma(CoeffTriple.from_series(k_float)))
        ok = (series_exact == expected and closed_exact == expected
              and all(abs(a - float(b)) <= 1e-10 for a, b in zip(series_float, expected))
              and all(abs(a - float(b)) <= 1e-10 for a, b in zip(closed_float, expected)))
        return CriterionResult("C1", "Koebe attains |G1|=1, |G2|=3/2, |G3|=10/3", ok, {
            "exact_series": [str(v) for v in series_exact],
            "exact_closed_form": [str(v) for v in closed_exact],
            "float_series": list(series_float),
        })

    def c2_koebe_differences(self) -> CriterionResult:
        q = quantities(koebe(0.0, ORDER))
        ok = abs(q[G2_MINUS_G1] - 0.5) <= 1e-10 and abs(q[G3_MINUS_G2] - 11 / 6) <= 1e-10
        return CriterionResult("C2", "Koebe attains |G2|-|G1|=1/2 and |G3|-|G2|=11/6", ok,
                               {G2_MINUS_G1: q[G2_MINUS_G1], G3_MINUS_G2: q[G3_MINUS_G2]})

    def c3_s_battery(self) -> CriterionResult:
        violations = []
        best_lower = math.inf
        for smp in self.s_samples:
            rep = report_S(smp.series, smp.label, self.tol)
            best_lower = min(best_lower, float(rep.quantities[G2_MINUS_G1]))
            violations += [f"{smp.label}: {c.name} margin {float(c.margin):.3e}" for c in rep.failures()]
        return CriterionResult("C3", "univalent-class bounds on 1000 starlike samples + 100 Koebe rotations",
                               not violations, {"samples": len(self.s_samples), "violations": violations[:20],
                                                "best_observed_min_G2minusG1": best_lower})

    def c4_convex_battery(self) -> CriterionResult:
        violations = []
        for smp in self.c_samples:
            rep = report_convex(smp.series, smp.label, self.tol)
            violations += [f"{smp.label}: {c.name} margin {float(c.margin):.3e}" for c in rep.failures()]
            _, _, ok = lemma1_check(smp.series, self.tol)
            if not ok:
                violations.append(f"{smp.label}: hankel")
        return CriterionResult("C4", "convex-class bounds on 1000 convex samples + 101 f_lambda",
                               not violations, {"samples": len(self.c_samples), "violations": violations[:20]})

    def c5_convex_sharpness(self) -> CriterionResult:
        g = inverse_log_coefficients(convex_lambda(math.sqrt(2 / 5), ORDER))
        f0 = quantities(convex_lambda(0, ORDER, EXACT))[G2_MINUS_G1]
        ok = (abs(complex(g[1]) - (-SQRT10_TENTH)) <= 1e-10
              and abs(complex(g[2])) <= 1e-10
              and abs(complex(g[3]) - TWO_SQRT10_75) <= 1e-10
              and f0 == Fraction(1, 6))
        return CriterionResult("C5", "f_sqrt(2/5) gives G=(-sqrt10/10, 0, 2sqrt10/75); f_0 gives 1/6", ok, {
            "Gamma": [[complex(v).real, complex(v).imag] for v in (g[1], g[2], g[3])],
            "f0_G2minusG1": str(f0),
        })

    def c6_halfplane(self) -> CriterionResult:
        m = inverse_log_coefficients(halfplane(ORDER, EXACT)).moduli()[:3]
        ok = m == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 6))
        return CriterionResult("C6", "z/(1-z) attains (1/2, 1/4, 1/6) exactly", ok, {"moduli": [str(v) for v in m]})

    def c7_grunsky_oracle(self) -> CriterionResult:
        worst_res = worst_row = worst_sym = 0.0
        for smp in self.s_samples + self.c_samples:
            st = verify_structural(smp.series, self.tol)
            worst_res = max(worst_res, st.max_residual)
            table = grunsky_table(smp.series, 5)
            gam = log_coefficients(smp.series)
            worst_row = max(worst_row, max(abs(complex(table[p, 0] - 2 * gam[p])) for p in range(1, 6)))
            worst_sym = max(worst_sym, table.asymmetry(), grunsky_odd_table(smp.series, 5).asymmetry())
        ok = worst_res <= 1e-9 and worst_row <= 1e-9 and worst_sym <= 1e-12
        return CriterionResult("C7", "Grunsky pipeline: structural residuals, w_{p,0}=2 gamma_p, symmetry", ok, {
            "max_structural_residual": worst_res,
            "max_row0_defect": worst_row,
            "max_asymmetry": worst_sym,
        })

    def c8_grunsky_inequality(self) -> CriterionResult:
        rng = np.random.default_rng(self.seed + WEIGHT_SEED_OFFSET)
        samples = self.s_samples[:100] + self.c_samples[:100]
        worst = -math.inf
        for smp in samples:
            table = grunsky_odd_table(smp.series, 7)
            for _ in range(100):
                lhs, rhs = grunsky_form(table, random_weights(rng, [1, 3, 5, 7]))
                worst = max(worst, float(lhs - rhs))
        k = koebe(0, ORDER, EXACT)
        full = grunsky_form(grunsky_table(k, 5), WeightVector({1: 1}))
        odd = grunsky_odd_table(k, 5)
        odd_sum = sum(q * modulus(odd[1, q]) ** 2 for q in (1, 3, 5))
        ok = (worst <= 1e-9 and abs(float(full[0]) - 1) <= 1e-10 and abs(float(full[1]) - 1) <= 1e-10
              and abs(float(odd_sum) - 1) <= 1e-10)
        return CriterionResult("C8", "odd-form Grunsky inequality on 200 samples x 100 weights; Koebe equality", ok, {
            "max_lhs_minus_rhs": worst,
            "koebe_full_lhs_rhs": [float(full[0]), float(full[1])],
            "koebe_odd_x1": float(odd_sum),
        })

    def c9_phi_bound(self) -> CriterionResult:
        points = [(3.0, 2.0), (-7 / 5, -2 / 5)]
        phis = [phi_lemma2(p) for p in points]
        worst = -math.inf
        for s in range(10_000):
            w = random_schwarz(1 + s % 6, self.seed + PHI_SEED_OFFSET + s)
            for p, phi in zip(points, phis):
                worst = max(worst, psi_schwarz(w, p) - phi.value)
        phi8 = phis[1].value
        ok = (phis[0].region == "D6" and phis[1].region == "D8" and worst <= 1e-9
              and abs(phi8 - 1.6 * math.sqrt(0.4)) <= 1e-12)
        return CriterionResult("C9", "Psi <= Phi at (3,2) in D6 and (-7/5,-2/5) in D8 on 10^4 Schwarz polynomials",
                               ok, {"max_psi_minus_phi": worst, "phi_D6": phis[0].value, "phi_D8": phi8})

    def c10_search(self) -> CriterionResult:
        root = math.sqrt(2 / 5)
        a = grid_refine_search(SearchSpec("convex_lambda", G3_MINUS_G2, MAXIMIZE))
        b = grid_refine_search(SearchSpec("convex_lambda", G2_MINUS_G1, MINIMIZE))
        c = grid_refine_search(SearchSpec("convex_lambda", G2_MINUS_G1, MAXIMIZE))
        ok = (abs(a.argmax - root) <= 1e-3 and abs(a.value - TWO_SQRT10_75) <= 1e-5
              and abs(b.argmax - root) <= 1e-3 and abs(b.value + SQRT10_TENTH) <= 1e-5
              and c.argmax == 0 and abs(c.value - 1 / 6) <= 1e-10)
        return CriterionResult("C10", "grid search over f_lambda recovers sqrt(2/5) and 0", ok, {
            "max_G3minusG2": [a.argmax, a.value],
            "min_G2minusG1": [b.argmax, b.value],
            "max_G2minusG1": [c.argmax, c.value],
        })

    def c11_reversion(self) -> CriterionResult:
        bad_compose = 0
        worst = 0.0
        for s in range(500):
            f = random_normalized_series(self.seed + REVERSION_SEED_OFFSET + s)
            g = revert(f)
            if compose(f, g) != Series.identity(ORDER, EXACT):
                bad_compose += 1
            pipeline = inverse_log_coefficients(f)
            closed = closed_form_Gamma(CoeffTriple.from_series(f))
            worst = max(worst, max(abs(complex(pipeline[n] - closed[n - 1])) for n in (1, 2, 3)))
        ok = bad_compose == 0 and worst <= 1e-10
        return CriterionResult("C11", "exact reversion on 500 random series; closed forms match the pipeline", ok,
                               {"compose_failures": bad_compose, "max_closed_form_defect": worst})

    def observation_s_lower_bound(self) -> dict:
        """Best observed minimum of |G2|-|G1| on the univalent class (not asserted)."""
        res, _ = random_restart_search("starlike_schwarz", G2_MINUS_G1, MINIMIZE, degree=3, restarts=8,
                                       seed=self.seed, order=8)
        sampled = min(float(quantities(s.series)[G2_MINUS_G1]) for s in self.s_samples)
        return {"bound": -math.sqrt(2) / 2, "best_observed_samples": sampled,
                "best_observed_scale_search": res.value, "attainment_asserted": False}

    def consistency(self) -> float:
        """Largest gap between pipeline and closed-form report quantities over all samples."""
        worst = 0.0
        for smp in self.s_samples + self.c_samples:
            a, b = quantities(smp.series), closed_form_quantities(smp.series)
            worst = max(worst, max(abs(float(a[k]) - float(b[k])) for k in a))
        return worst

    def criteria(self) -> list:
        return [
            self.c1_koebe_moduli, self.c2_koebe_differences, self.c3_s_battery, self.c4_convex_battery,
            self.c5_convex_sharpness, self.c6_halfplane, self.c7_grunsky_oracle, self.c8_grunsky_inequality,
            self.c9_phi_bound, self.c10_search, self.c11_reversion,
        ]

    def run(self) -> list:
        return [c() for c in self.criteria()]
