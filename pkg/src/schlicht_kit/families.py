"""Named extremal functions and Schwarz-function driven samples of the convex and starlike classes."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from numbers import Rational

import numpy as np

from .scalars import EXACT, FLOAT, ModeError, check_mode
from .series import (
    Series,
    div,
    divide_by_z,
    exp0,
    integrate,
    make_series,
    mul,
    multiply_by_z,
    power,
    scale,
    sub,
)

DEFAULT_GRID = 4096
ADMISSIBLE_SLACK = 1e-12
RESCALE_MARGIN = 1e-6


@dataclass(frozen=True)
class SchwarzPoly:
    """Polynomial ``w(z) = c_1 z + ... + c_K z^K`` (so ``w(0) = 0``).

    Admissibility (``|w| <= 1`` on the circle) is not enforced here; see
    :func:`schwarz_admissible`.
    """

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("Schwarz polynomial needs at least c_1")

    @property
    def degree(self) -> int:
        for k in range(len(self.coeffs), 0, -1):
            if self.coeffs[k - 1]:
                return k
        return 0

    def c(self, k: int):
        """``c_k`` with zero padding beyond the stored degree."""
        return self.coeffs[k - 1] if 1 <= k <= len(self.coeffs) else 0

    def as_series(self, order: int, mode: str = FLOAT) -> Series:
        vals = [0] + [self.c(k) for k in range(1, order + 1)]
        if mode == FLOAT:
            vals = [complex(v) for v in vals]
        return make_series(vals, mode=mode)

    def boundary_values(self, grid_size: int = DEFAULT_GRID) -> np.ndarray:
        theta = 2 * np.pi * np.arange(grid_size) / grid_size
        z = np.exp(1j * theta)
        poly = np.array([0] + [complex(c) for c in self.coeffs], dtype=complex)
        return np.polynomial.polynomial.polyval(z, poly)


def schwarz_admissible(w: SchwarzPoly, grid_size: int = DEFAULT_GRID) -> tuple:
    """``(ok, max |w|)`` over a uniform boundary grid; ``ok`` iff max <= 1 + 1e-12.

    A necessary condition for being a Schwarz function, not a proof.
    """
    if grid_size < 256:
        raise ValueError("grid size must be at least 256")
    m = float(np.max(np.abs(w.boundary_values(grid_size))))
    return m <= 1 + ADMISSIBLE_SLACK, m


def certified_boundary_max(w: SchwarzPoly, grid_size: int = DEFAULT_GRID) -> float:
    """Upper bound for ``max |w|`` on the whole circle from grid samples.

    Between grid points the modulus can exceed the sampled maximum ``m`` by
    at most the factor ``1 / (1 - K^2 pi^2 / (2 n^2))`` (Bernstein's
    inequality applied to the real part of ``w`` rotated to its maximum).
    """
    _, m = schwarz_admissible(w, grid_size)
    k = max(w.degree, 1)
    slack = (k * math.pi / grid_size) ** 2 / 2
    if slack >= 1:
        raise ValueError("grid too coarse for this degree")
    return m / (1 - slack)


def random_schwarz(K: int, seed: int, grid_size: int = DEFAULT_GRID) -> SchwarzPoly:
    """Deterministic random Schwarz polynomial of degree ``K``.

    Complex normal coefficients, rescaled by ``(certified max) * (1 + 1e-6)``
    whenever the certified boundary maximum exceeds 1.
    """
    if K < 1:
        raise ValueError("degree must be at least 1")
    rng = np.random.default_rng(seed)
    raw = (rng.standard_normal(K) + 1j * rng.standard_normal(K)) / math.sqrt(2)
    w = SchwarzPoly(tuple(complex(c) for c in raw))
    bound = certified_boundary_max(w, grid_size)
    if bound > 1:
        factor = bound * (1 + RESCALE_MARGIN)
        w = SchwarzPoly(tuple(c / factor for c in w.coeffs))
    return w


def _check_order(order: int, minimum: int = 1) -> None:
    if order < minimum:
        raise ValueError(f"order must be at least {minimum}")


def identity(order: int, mode: str = FLOAT) -> Series:
    return Series.identity(order, mode)


def koebe(theta: float = 0.0, order: int = 12, mode: str = FLOAT) -> Series:
    """Rotated Koebe function ``e^{-i theta} k(e^{i theta} z)``: ``a_n = n e^{i theta (n-1)}``.

    Exact mode supports ``theta = 0`` only.
    """
    _check_order(order)
    check_mode(mode)
    if mode == EXACT:
        if theta != 0:
            raise ModeError("exact Koebe rotations need theta = 0")
        return make_series(range(order + 1), mode=EXACT)
    rot = cmath.exp(1j * theta)
    return make_series([0j] + [n * rot ** (n - 1) for n in range(1, order + 1)], mode=FLOAT)


def halfplane(order: int = 12, mode: str = FLOAT) -> Series:
    """``z / (1 - z) = z + z^2 + z^3 + ...``."""
    _check_order(order)
    return make_series([0] + [1] * order, mode=mode)


def convex_lambda(lam, order: int = 12, mode: str = FLOAT) -> Series:
    """``f_lam(z) = int_0^z ((1+t)/(1-t))^lam / (1 - t^2) dt`` for ``0 <= lam <= 1``.

    Exact mode needs a rational ``lam``.
    """
    _check_order(order)
    check_mode(mode)
    if not (0 <= lam <= 1):
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    if mode == EXACT and not isinstance(lam, Rational):
        raise ModeError(f"lambda {lam!r} is not rational; use float mode")
    n = order - 1
    ratio = div(_poly([1, 1], n, mode), _poly([1, -1], n, mode))
    even_geometric = make_series([1 if k % 2 == 0 else 0 for k in range(n + 1)], mode=mode)
    integrand = mul(power(ratio, lam if mode == EXACT else float(lam)), even_geometric)
    return integrate(integrand)


def _poly(coeffs, order: int, mode: str) -> Series:
    vals = list(coeffs)[: order + 1]
    return make_series(vals + [0] * (order + 1 - len(vals)), mode=mode)


def _schwarz_kernel(w: SchwarzPoly, order: int, mode: str) -> Series:
    """``2 w / ((1 - w) z)`` to order ``order - 2``."""
    ws = w.as_series(order - 1, mode)
    numer = scale(ws, 2)
    denom = sub(Series.constant(1, order - 1, mode), ws)
    return divide_by_z(div(numer, denom))


def _require_admissible(w: SchwarzPoly) -> None:
    ok, m = schwarz_admissible(w)
    if not ok:
        raise ValueError(f"inadmissible Schwarz polynomial: boundary maximum {m:.6g} > 1")


def convex_from_schwarz(w: SchwarzPoly, order: int = 12, mode: str = FLOAT) -> Series:
    """Convex ``f`` with ``1 + z f''/f' = (1 + w)/(1 - w)``.

    ``log f' = int 2 w / ((1 - w) z)``, then ``f = int f'``.
    """
    _check_order(order, 2)
    _require_admissible(w)
    log_fp = integrate(_schwarz_kernel(w, order, mode))
    return integrate(exp0(log_fp))


def starlike_from_schwarz(w: SchwarzPoly, order: int = 12, mode: str = FLOAT) -> Series:
    """Starlike ``f`` with ``z f'/f = (1 + w)/(1 - w)``, via ``log(f/z) = int 2 w / ((1 - w) z)``."""
    _check_order(order, 2)
    _require_admissible(w)
    log_fz = integrate(_schwarz_kernel(w, order, mode))
    return multiply_by_z(exp0(log_fz))


KOEBE = "koebe"
HALFPLANE = "halfplane"
CONVEX_LAMBDA = "convex_lambda"
CONVEX_SCHWARZ = "convex_schwarz"
STARLIKE_SCHWARZ = "starlike_schwarz"
IDENTITY = "identity"
FAMILIES = (KOEBE, HALFPLANE, CONVEX_LAMBDA, CONVEX_SCHWARZ, STARLIKE_SCHWARZ, IDENTITY)

# class provenance: which theorem suite applies to a family
CLASS_S = "S"
CLASS_CONVEX = "convex"
FAMILY_CLASS = {
    KOEBE: CLASS_S,
    STARLIKE_SCHWARZ: CLASS_S,
    IDENTITY: CLASS_CONVEX,
    HALFPLANE: CLASS_CONVEX,
    CONVEX_LAMBDA: CLASS_CONVEX,
    CONVEX_SCHWARZ: CLASS_CONVEX,
}


@dataclass(frozen=True)
class FamilyParam:
    family: str
    theta: float = 0.0
    lam: object = 0.0
    schwarz: SchwarzPoly | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not (0 <= self.lam <= 1):
            raise ValueError(f"lambda must lie in [0, 1], got {self.lam}")
        if not (0 <= self.theta < 2 * math.pi):
            raise ValueError(f"theta must lie in [0, 2pi), got {self.theta}")
        if self.family in (CONVEX_SCHWARZ, STARLIKE_SCHWARZ) and self.schwarz is None:
            raise ValueError(f"family {self.family} needs a Schwarz polynomial")

    @property
    def function_class(self) -> str:
        return FAMILY_CLASS[self.family]

    def label(self) -> str:
        if self.family == KOEBE:
            return f"koebe(theta={self.theta:g})"
        if self.family == CONVEX_LAMBDA:
            return f"convex_lambda(lambda={self.lam})"
        if self.family in (CONVEX_SCHWARZ, STARLIKE_SCHWARZ):
            cs = ",".join(f"{complex(c):.6g}" for c in self.schwarz.coeffs)
            return f"{self.family}([{cs}])"
        return self.family

    def build(self, order: int = 12, mode: str = FLOAT) -> Series:
        if self.family == KOEBE:
            return koebe(self.theta, order, mode)
        if self.family == HALFPLANE:
            return halfplane(order, mode)
        if self.family == CONVEX_LAMBDA:
            return convex_lambda(self.lam, order, mode)
        if self.family == CONVEX_SCHWARZ:
            return convex_from_schwarz(self.schwarz, order, mode)
        if self.family == STARLIKE_SCHWARZ:
            return starlike_from_schwarz(self.schwarz, order, mode)
        return identity(order, mode)
