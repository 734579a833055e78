"""Series reversion and logarithmic coefficients of f and of its inverse."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .scalars import modulus, one, zero
from .series import Series, divide_by_z, log1

DIRECT = "direct"
INVERSE = "inverse"


@dataclass(frozen=True)
class LogCoeffVector:
    """Logarithmic coefficients indexed from 1: ``vec[1]`` is the first one.

    Entries beyond what the truncation determines are refused, not zero-filled.
    """

    values: tuple
    source: str = DIRECT

    def __getitem__(self, n: int):
        if n < 1 or n > len(self.values):
            raise IndexError(f"logarithmic coefficient {n} not determined (have 1..{len(self.values)})")
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def moduli(self) -> tuple:
        return tuple(modulus(v) for v in self.values)


class CoeffTriple(NamedTuple):
    a2: object
    a3: object
    a4: object

    @classmethod
    def from_series(cls, f: Series) -> "CoeffTriple":
        if f.order < 4:
            raise ValueError(f"need order >= 4 to read a2, a3, a4 (got {f.order})")
        return cls(f.coeffs[2], f.coeffs[3], f.coeffs[4])


def _require_normalized(f: Series) -> None:
    if not f.is_normalized():
        raise ValueError("series is not normalized (need c0 = 0 and c1 = 1)")


def revert(f: Series) -> Series:
    """Compositional inverse ``g`` with ``f(g(w)) = w`` to order ``N``.

    Solves the composition identity coefficient by coefficient.  With
    ``P[k][m] = [w^m] g^k``, the unknown ``b_n = [w^n] g`` enters
    ``[w^n] f(g)`` only through the ``k = 1`` term, so
    ``b_n = -sum_{k=2..n} a_k P[k][n]`` where every ``P[k][n]`` (``k >= 2``)
    uses only ``b_1 .. b_{n-1}``.
    """
    _require_normalized(f)
    n_order, mode = f.order, f.mode
    a = f.coeffs
    z = zero(mode)
    g = [z, one(mode)] + [z] * (n_order - 1)
    powers = [[z] * (n_order + 1) for _ in range(n_order + 1)]
    powers[1][1] = one(mode)
    for n in range(2, n_order + 1):
        for k in range(2, n + 1):
            prev = powers[k - 1]
            acc = z
            for j in range(k - 1, n):
                if prev[j] and g[n - j]:
                    acc = acc + prev[j] * g[n - j]
            powers[k][n] = acc
        b = z
        for k in range(2, n + 1):
            if a[k]:
                b = b - a[k] * powers[k][n]
        g[n] = b
        powers[1][n] = b
    return Series(tuple(g), mode)


def log_coefficients(f: Series) -> LogCoeffVector:
    """``gamma_1 .. gamma_{N-1}`` from ``log(f(z)/z) = 2 sum gamma_n z^n``."""
    _require_normalized(f)
    logs = log1(divide_by_z(f))
    return LogCoeffVector(tuple(c / 2 for c in logs.coeffs[1:]), DIRECT)


def inverse_log_coefficients(f: Series) -> LogCoeffVector:
    """``Gamma_n``: the logarithmic coefficients of ``f^{-1}``."""
    inv = log_coefficients(revert(f))
    return LogCoeffVector(inv.values, INVERSE)


def closed_form_gamma(t: CoeffTriple) -> tuple:
    a2, a3, a4 = t
    return (
        a2 / 2,
        (a3 - a2 * a2 / 2) / 2,
        (a4 - a2 * a3 + a2 * a2 * a2 / 3) / 2,
    )


def closed_form_inverse_coeffs(t: CoeffTriple) -> tuple:
    a2, a3, a4 = t
    return (
        -a2,
        -a3 + 2 * a2 * a2,
        -a4 + 5 * a2 * a3 - 5 * a2 * a2 * a2,
    )


def closed_form_Gamma(t: CoeffTriple) -> tuple:
    a2, a3, a4 = t
    return (
        -a2 / 2,
        (-a3 + Fraction(3, 2) * (a2 * a2)) / 2,
        (-a4 + 4 * a2 * a3 - Fraction(10, 3) * (a2 * a2 * a2)) / 2,
    )
