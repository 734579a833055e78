"""Grunsky coefficient tables, the Grunsky quadratic form and structural identities.

Coefficients come from the bivariate logarithm of the difference quotient,

    log((f(t) - f(z)) / (t - z)) = sum_{p,q >= 0} w_{p,q} t^p z^q,

so the classical identities linking ``a_2, a_3, a_4`` to the odd table serve
as an independent check of the pipeline rather than as a definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .invert import CoeffTriple
from .scalars import DEFAULT_TOLERANCE, EXACT, modulus, modulus2, scalar_to_pair, to_scalar, zero
from .series import (
    Series,
    bi_log,
    difference_quotient,
    divide_by_z,
    multiply_by_z,
    sqrt1,
    substitute_power,
)

FULL = "full"
ODD = "odd"


@dataclass(frozen=True)
class GrunskyTable:
    """``w_{p,q}`` for ``0 <= p, q <= max_index``.

    Odd tables are indexed by the underlying odd integers: ``table[1, 3]`` is
    ``w_{13}`` of the square-root transform.  Entries with an even index are
    exactly zero there.
    """

    max_index: int
    entries: tuple
    parity: str = FULL
    mode: str = "float"

    def __getitem__(self, pq):
        p, q = pq
        if not (0 <= p <= self.max_index and 0 <= q <= self.max_index):
            raise IndexError(f"({p}, {q}) outside table of size {self.max_index}")
        return self.entries[p][q]

    def indices(self) -> range:
        """Row/column indices carrying data: all for full tables, odd ones for odd tables."""
        if self.parity == ODD:
            return range(1, self.max_index + 1, 2)
        return range(0, self.max_index + 1)

    def asymmetry(self) -> float:
        n = self.max_index
        return max((abs(complex(self.entries[p][q] - self.entries[q][p]))
                    for p in range(n + 1) for q in range(p)), default=0.0)

    def to_json(self) -> dict:
        return {
            "max_index": self.max_index,
            "parity": self.parity,
            "mode": self.mode,
            "entries": [[p, q, scalar_to_pair(self.entries[p][q])]
                        for p in range(self.max_index + 1) for q in range(self.max_index + 1)],
        }


@dataclass(frozen=True)
class WeightVector:
    """Finitely supported weights ``x_p`` (``p >= 1``) for the Grunsky form."""

    entries: Mapping[int, object] = field(default_factory=dict)

    def __post_init__(self):
        if not self.entries:
            raise ValueError("weight vector needs at least one entry")
        if any((not isinstance(p, int)) or p < 1 for p in self.entries):
            raise ValueError("weight indices must be positive integers")
        if not any(self.entries.values()):
            raise ValueError("weight vector must have a nonzero entry")


def odd_transform(f: Series) -> Series:
    """``sqrt(f(z^2)) = z * sqrt(f(z^2)/z^2)``; order ``2N - 1``, odd, leading coefficient 1."""
    if not f.is_normalized():
        raise ValueError("odd_transform needs a normalized series")
    inner = substitute_power(divide_by_z(f), 2)
    return multiply_by_z(sqrt1(inner))


def grunsky_table(f: Series, P: int | None = None) -> GrunskyTable:
    """Full Grunsky table ``w_{p,q}``, ``0 <= p, q <= P``.

    Entry ``(p, q)`` needs ``a_{p+q+1}``, so the square of size ``P`` needs
    ``2P + 1 <= order``.  Defaults to the largest such ``P``.
    """
    if not f.is_normalized():
        raise ValueError("grunsky_table needs a normalized series")
    if P is None:
        P = (f.order - 1) // 2
    if P < 0 or 2 * P + 1 > f.order:
        raise ValueError(f"P={P} too large for truncation order {f.order} (need 2P+1 <= order)")
    logs = bi_log(difference_quotient(f.truncate(2 * P + 1)))
    return GrunskyTable(P, logs.rows, FULL, f.mode)


def grunsky_odd_table(f: Series, P: int = 5) -> GrunskyTable:
    """Odd-index table ``w_{2p-1,2q-1}`` of the square-root transform, indices up to ``P``."""
    if P < 5 or P % 2 == 0:
        raise ValueError(f"odd table bound must be odd and >= 5 (got {P})")
    if f.order < P + 1:
        raise ValueError(f"odd table up to {P} needs order >= {P + 1} (got {f.order})")
    full = grunsky_table(odd_transform(f.truncate(P + 1)), P)
    z = zero(f.mode)
    rows = tuple(
        tuple(full.entries[p][q] if (p % 2 and q % 2) else z for q in range(P + 1))
        for p in range(P + 1)
    )
    return GrunskyTable(P, rows, ODD, f.mode)


def grunsky_form(table: GrunskyTable, x: WeightVector, Q: int | None = None) -> tuple:
    """Both sides of the Grunsky inequality, truncated to rows ``q <= Q``.

    ``lhs = sum_q q |sum_p w_{p,q} x_p|^2`` and ``rhs = sum_p |x_p|^2 / p``,
    with ``p, q`` running over odd indices for odd tables.  Values are exact
    fractions in exact mode.  Dropping rows only lowers ``lhs``, so the
    truncated inequality is implied by the full one.
    """
    if Q is None:
        Q = table.max_index
    if Q < 1 or Q > table.max_index:
        raise IndexError(f"Q={Q} outside table range 1..{table.max_index}")
    for p in x.entries:
        if p > table.max_index:
            raise IndexError(f"weight index {p} outside table range 1..{table.max_index}")
        if table.parity == ODD and p % 2 == 0:
            raise IndexError(f"odd table takes odd weight indices only, got {p}")
    weights = {p: to_scalar(v, table.mode) for p, v in x.entries.items()}
    rows = [q for q in table.indices() if 1 <= q <= Q]
    lhs = Fraction(0) if table.mode == EXACT else 0.0
    for q in rows:
        s = zero(table.mode)
        for p, xp in weights.items():
            s = s + table.entries[p][q] * xp
        lhs = lhs + q * modulus2(s)
    rhs = Fraction(0) if table.mode == EXACT else 0.0
    for p, xp in weights.items():
        rhs = rhs + modulus2(xp) / p
    return lhs, rhs


@dataclass(frozen=True)
class StructuralReport:
    """Residuals of the identities expressing ``a_2, a_3, a_4`` through the odd table."""

    residuals: dict
    omega: dict
    w13_bound_value: object
    w13_bound_ok: bool
    row3_value: object
    row3_ok: bool
    tolerance: float

    @property
    def max_residual(self) -> float:
        return max(float(modulus(r)) for r in self.residuals.values())

    @property
    def ok(self) -> bool:
        return self.max_residual <= self.tolerance and self.w13_bound_ok and self.row3_ok

    def to_json(self) -> dict:
        return {
            "residuals": {k: float(modulus(v)) for k, v in self.residuals.items()},
            "omega": {k: scalar_to_pair(v) for k, v in self.omega.items()},
            "abs_2w13_minus_w11sq": float(self.w13_bound_value),
            "abs_2w13_minus_w11sq_ok": self.w13_bound_ok,
            "w13sq_plus_3w33sq": float(self.row3_value),
            "w13sq_plus_3w33sq_ok": self.row3_ok,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
        }


def verify_structural(f: Series, tolerance: float = DEFAULT_TOLERANCE) -> StructuralReport:
    """Check ``a_2, a_3, a_4`` against the odd Grunsky table of ``f``.

    The four relations are

        a2 = 2 w11
        a3 = 2 w13 + 3 w11^2
        a4 = 2 w33 + 8 w11 w13 + (10/3) w11^3
        0  = 3 w15 - 3 w11 w13 + w11^3 - 3 w33

    plus the flags ``|2 w13 - w11^2| <= 1`` and ``|w13|^2 + 3|w33|^2 <= 1/3``
    (both valid on the univalent class only).
    """
    if f.order < 6:
        raise ValueError(f"structural check needs order >= 6 (got {f.order})")
    t = grunsky_odd_table(f, 5)
    a2, a3, a4 = CoeffTriple.from_series(f)
    w11, w13, w33, w15 = t[1, 1], t[1, 3], t[3, 3], t[1, 5]
    residuals = {
        "a2": a2 - 2 * w11,
        "a3": a3 - (2 * w13 + 3 * w11 * w11),
        "a4": a4 - (2 * w33 + 8 * w11 * w13 + Fraction(10, 3) * (w11 * w11 * w11)),
        "w15": 3 * w15 - 3 * w11 * w13 + w11 * w11 * w11 - 3 * w33,
    }
    w13_bound = modulus(2 * w13 - w11 * w11)
    row3 = modulus2(w13) + 3 * modulus2(w33)
    return StructuralReport(
        residuals=residuals,
        omega={"w11": w11, "w13": w13, "w33": w33, "w15": w15, "w35": t[3, 5], "w55": t[5, 5]},
        w13_bound_value=w13_bound,
        w13_bound_ok=w13_bound <= 1 + tolerance,
        row3_value=row3,
        row3_ok=row3 <= Fraction(1, 3) + tolerance,
        tolerance=tolerance,
    )
