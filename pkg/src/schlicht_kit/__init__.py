"""Logarithmic coefficients of univalent functions and their inverses.

Truncated power-series algebra (exact or floating), series reversion,
Grunsky coefficient tables, bound checkers for the univalent and convex
classes, and a one-parameter extremal search.
"""

__version__ = "0.1.0"

from .bounds import BoundReport, lemma1_check, phi_lemma2, psi_schwarz, report_convex, report_S
from .extremal import SearchResult, SearchSpec, evaluate_functional, grid_refine_search
from .families import (
    FamilyParam,
    SchwarzPoly,
    convex_from_schwarz,
    convex_lambda,
    halfplane,
    koebe,
    random_schwarz,
    schwarz_admissible,
    starlike_from_schwarz,
)
from .grunsky import (
    GrunskyTable,
    WeightVector,
    grunsky_form,
    grunsky_odd_table,
    grunsky_table,
    odd_transform,
    verify_structural,
)
from .invert import (
    CoeffTriple,
    LogCoeffVector,
    closed_form_Gamma,
    closed_form_gamma,
    closed_form_inverse_coeffs,
    inverse_log_coefficients,
    log_coefficients,
    revert,
)
from .scalars import EXACT, FLOAT, GaussianRational
from .series import BiSeries, Series, bi_log, compose, difference_quotient, make_series

__all__ = [
    "BiSeries", "BoundReport", "CoeffTriple", "EXACT", "FLOAT", "FamilyParam", "GaussianRational",
    "GrunskyTable", "LogCoeffVector", "SchwarzPoly", "SearchResult", "SearchSpec", "Series", "WeightVector",
    "bi_log", "closed_form_Gamma", "closed_form_gamma", "closed_form_inverse_coeffs", "compose",
    "convex_from_schwarz", "convex_lambda", "difference_quotient", "evaluate_functional",
    "grid_refine_search", "grunsky_form", "grunsky_odd_table", "grunsky_table", "halfplane",
    "inverse_log_coefficients", "koebe", "lemma1_check", "log_coefficients", "make_series",
    "odd_transform", "phi_lemma2", "psi_schwarz", "random_schwarz", "report_S", "report_convex",
    "revert", "schwarz_admissible", "starlike_from_schwarz", "verify_structural",
]
