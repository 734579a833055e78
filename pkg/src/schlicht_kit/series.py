"""Truncated univariate and bivariate power series.

A :class:`Series` of order ``N`` knows the coefficients ``c_0 .. c_N`` and
nothing beyond.  Every operation states the order of its result; binary
operations truncate to the smaller input order and never pad with zeros.

A :class:`BiSeries` of order ``M`` knows the coefficients on the full square
``0 <= p, q <= M``.  Square truncation is closed under multiplication (the
``(p, q)`` coefficient of a product only uses indices componentwise below
``(p, q)``), so products, logarithms and exponentials stay exact on the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .scalars import (
    EXACT,
    FLOAT,
    GaussianRational,
    ModeError,
    check_mode,
    one,
    scalar_to_exact_pair,
    scalar_to_pair,
    to_scalar,
    zero,
)


@dataclass(frozen=True)
class Series:
    """Coefficients ``c_0 .. c_N`` of a truncated power series in one variable."""

    coeffs: tuple
    mode: str = FLOAT

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} not determined by a series of order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return sub(self, other)

    def __mul__(self, other: "Series") -> "Series":
        return mul(self, other)

    def __truediv__(self, other: "Series") -> "Series":
        return div(self, other)

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs), self.mode)

    def truncate(self, order: int) -> "Series":
        if order < 0 or order > self.order:
            raise ValueError(f"cannot truncate order {self.order} series to order {order}")
        return Series(self.coeffs[: order + 1], self.mode)

    def to_float(self) -> "Series":
        return Series(tuple(complex(c) for c in self.coeffs), FLOAT)

    def evaluate(self, z: complex) -> complex:
        """Value of the truncating polynomial at ``z`` (floating point)."""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def is_normalized(self) -> bool:
        return self.order >= 1 and not self.coeffs[0] and self.coeffs[1] == 1

    def __repr__(self) -> str:
        return f"Series({[str(c) for c in self.coeffs]}, mode={self.mode!r})"

    # -- constructors -----------------------------------------------------
    @classmethod
    def identity(cls, order: int, mode: str = FLOAT) -> "Series":
        """The series ``z``."""
        return make_series([0, 1] + [0] * (order - 1), mode=mode) if order >= 1 else make_series([0], mode=mode)

    @classmethod
    def constant(cls, value, order: int, mode: str = FLOAT) -> "Series":
        return make_series([value] + [0] * order, mode=mode)

    @classmethod
    def geometric(cls, order: int, mode: str = FLOAT) -> "Series":
        """``1/(1-z) = 1 + z + z^2 + ...``."""
        return make_series([1] * (order + 1), mode=mode)


def make_series(coeffs: Iterable, order: int | None = None, mode: str = FLOAT) -> Series:
    """Build a validated :class:`Series` from a coefficient sequence.

    ``order`` defaults to ``len(coeffs) - 1``; if given it must agree.
    Floats are rejected in exact mode, non-finite values in float mode.
    """
    check_mode(mode)
    values = list(coeffs)
    if not values:
        raise ValueError("empty coefficient sequence")
    if order is not None and order != len(values) - 1:
        raise ValueError(f"order {order} does not match {len(values)} coefficients")
    return Series(tuple(to_scalar(v, mode) for v in values), mode)


def _same_mode(*series) -> str:
    modes = {s.mode for s in series}
    if len(modes) != 1:
        raise ModeError(f"mixed scalar modes {sorted(modes)}")
    return modes.pop()


def add(a: Series, b: Series) -> Series:
    mode = _same_mode(a, b)
    n = min(a.order, b.order)
    return Series(tuple(a.coeffs[k] + b.coeffs[k] for k in range(n + 1)), mode)


def sub(a: Series, b: Series) -> Series:
    mode = _same_mode(a, b)
    n = min(a.order, b.order)
    return Series(tuple(a.coeffs[k] - b.coeffs[k] for k in range(n + 1)), mode)


def scale(a: Series, k) -> Series:
    k = to_scalar(k, a.mode)
    return Series(tuple(k * c for c in a.coeffs), a.mode)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    mode = _same_mode(a, b)
    n = min(a.order, b.order)
    out = [zero(mode)] * (n + 1)
    bc = b.coeffs
    for i in range(n + 1):
        ai = a.coeffs[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            out[i + j] = out[i + j] + ai * bc[j]
    return Series(tuple(out), mode)


def div(a: Series, b: Series) -> Series:
    """Formal quotient ``a/b``; requires ``b(0) != 0``."""
    mode = _same_mode(a, b)
    b0 = b.coeffs[0]
    if not b0:
        raise ZeroDivisionError("division by a series with zero constant term")
    n = min(a.order, b.order)
    q = []
    for k in range(n + 1):
        acc = a.coeffs[k]
        for j in range(1, k + 1):
            acc = acc - b.coeffs[j] * q[k - j]
        q.append(acc / b0)
    return Series(tuple(q), mode)


_BINARY = {"add": add, "sub": sub, "mul": mul, "div": div}


def algebra(a: Series, b: Series | None, op: str, k=None) -> Series:
    """Dispatch ``add | sub | mul | div | scale`` by name."""
    if op == "scale":
        return scale(a, k)
    try:
        fn = _BINARY[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def compose(f: Series, g: Series) -> Series:
    """``f(g(z))`` to order ``min(f.order, g.order)``; requires ``g(0) == 0``.

    Horner accumulation ``(((c_N g + c_{N-1}) g + ...) g + c_0)``, each step
    truncated.
    """
    mode = _same_mode(f, g)
    if g.coeffs[0]:
        raise ValueError("inner series must have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    acc = Series.constant(f.coeffs[n], n, mode)
    for k in range(n - 1, -1, -1):
        acc = mul(acc, g)
        acc = Series((acc.coeffs[0] + f.coeffs[k],) + acc.coeffs[1:], mode)
    return acc


def derivative(f: Series) -> Series:
    """``f'``, order ``N - 1``."""
    if f.order < 1:
        raise ValueError("derivative of an order-0 series is undetermined")
    return Series(tuple(k * f.coeffs[k] for k in range(1, f.order + 1)), f.mode)


def integrate(f: Series) -> Series:
    """Termwise antiderivative with zero constant, order ``N + 1``."""
    return Series((zero(f.mode),) + tuple(c / (k + 1) for k, c in enumerate(f.coeffs)), f.mode)


def multiply_by_z(f: Series) -> Series:
    """``z f(z)``, order ``N + 1``."""
    return Series((zero(f.mode),) + f.coeffs, f.mode)


def divide_by_z(f: Series) -> Series:
    """``f(z)/z``, order ``N - 1``; requires ``f(0) == 0``."""
    if f.coeffs[0]:
        raise ValueError("f(z)/z needs f(0) = 0")
    if f.order < 1:
        raise ValueError("f(z)/z of an order-0 series is undetermined")
    return Series(f.coeffs[1:], f.mode)


def substitute_power(f: Series, m: int) -> Series:
    """``f(z^m)``, order ``m * N``."""
    out = [zero(f.mode)] * (m * f.order + 1)
    for k, c in enumerate(f.coeffs):
        out[m * k] = c
    return Series(tuple(out), f.mode)


def _require_constant(f: Series, value: int, name: str) -> None:
    if f.coeffs[0] != value:
        raise ValueError(f"{name} requires constant term {value}, got {f.coeffs[0]}")


def log1(f: Series) -> Series:
    """``log f`` for ``f(0) = 1`` via ``(log f)' = f'/f``; same order."""
    _require_constant(f, 1, "log1")
    c = f.coeffs
    out = [zero(f.mode)]
    for n in range(1, f.order + 1):
        acc = n * c[n]
        for k in range(1, n):
            acc = acc - k * out[k] * c[n - k]
        out.append(acc / n)
    return Series(tuple(out), f.mode)


def exp0(f: Series) -> Series:
    """``exp f`` for ``f(0) = 0`` via ``g' = f' g``; same order."""
    _require_constant(f, 0, "exp0")
    c = f.coeffs
    out = [one(f.mode)]
    for n in range(1, f.order + 1):
        acc = zero(f.mode)
        for k in range(1, n + 1):
            acc = acc + k * c[k] * out[n - k]
        out.append(acc / n)
    return Series(tuple(out), f.mode)


def sqrt1(f: Series) -> Series:
    """Principal square root for ``f(0) = 1``; same order."""
    _require_constant(f, 1, "sqrt1")
    c = f.coeffs
    out = [one(f.mode)]
    for n in range(1, f.order + 1):
        acc = c[n]
        for k in range(1, n):
            acc = acc - out[k] * out[n - k]
        out.append(acc / 2)
    return Series(tuple(out), f.mode)


def power(f: Series, alpha) -> Series:
    """``f**alpha`` (principal branch) for ``f(0) = 1`` via ``f g' = alpha f' g``.

    In exact mode ``alpha`` must be rational.
    """
    _require_constant(f, 1, "pow")
    if f.mode == EXACT:
        if not isinstance(alpha, Rational):
            raise ModeError(f"exponent {alpha!r} is not rational; use float mode")
        alpha = Fraction(alpha)
    else:
        alpha = complex(alpha)
    c = f.coeffs
    out = [one(f.mode)]
    for n in range(1, f.order + 1):
        acc = zero(f.mode)
        for k in range(1, n + 1):
            if c[k]:
                acc = acc + (alpha * k - (n - k)) * c[k] * out[n - k]
        out.append(acc / n)
    return Series(tuple(out), f.mode)


def elementary(f: Series, fn: str, alpha=None) -> Series:
    """Dispatch ``log1 | exp0 | sqrt1 | pow`` by name."""
    if fn == "log1":
        return log1(f)
    if fn == "exp0":
        return exp0(f)
    if fn == "sqrt1":
        return sqrt1(f)
    if fn == "pow":
        if alpha is None:
            raise ValueError("pow needs an exponent")
        return power(f, alpha)
    raise ValueError(f"unknown elementary function {fn!r}")


# ---------------------------------------------------------------------------
# bivariate series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BiSeries:
    """Coefficients ``c[p][q]`` of ``sum c_{p,q} t^p z^q`` on ``0 <= p, q <= order``."""

    rows: tuple
    mode: str = FLOAT

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise ValueError("BiSeries needs a full square grid of coefficients")

    @property
    def order(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, pq):
        p, q = pq
        if not (0 <= p <= self.order and 0 <= q <= self.order):
            raise IndexError(f"({p}, {q}) outside the grid of order {self.order}")
        return self.rows[p][q]

    def items(self):
        for p, row in enumerate(self.rows):
            for q, c in enumerate(row):
                yield (p, q), c

    def row(self, q: int = 0) -> Series:
        """Univariate series in ``t`` obtained by taking the ``z^q`` coefficient."""
        return Series(tuple(r[q] for r in self.rows), self.mode)

    def asymmetry(self) -> float:
        """``max |c_{p,q} - c_{q,p}|``."""
        n = self.order
        return max((abs(complex(self.rows[p][q] - self.rows[q][p])) for p in range(n + 1) for q in range(p)),
                   default=0.0)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        return bi_add(self, other)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return bi_add(self, bi_scale(other, -1))

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        return bi_mul(self, other)


def make_biseries(rows: Sequence[Sequence], mode: str = FLOAT) -> BiSeries:
    check_mode(mode)
    return BiSeries(tuple(tuple(to_scalar(v, mode) for v in r) for r in rows), mode)


def bi_constant(value, order: int, mode: str = FLOAT) -> BiSeries:
    z = zero(mode)
    rows = [[z] * (order + 1) for _ in range(order + 1)]
    rows[0][0] = to_scalar(value, mode)
    return BiSeries(tuple(tuple(r) for r in rows), mode)


def bi_add(a: BiSeries, b: BiSeries) -> BiSeries:
    mode = _same_mode(a, b)
    n = min(a.order, b.order)
    return BiSeries(tuple(tuple(a.rows[p][q] + b.rows[p][q] for q in range(n + 1)) for p in range(n + 1)), mode)


def bi_scale(a: BiSeries, k) -> BiSeries:
    k = to_scalar(k, a.mode)
    return BiSeries(tuple(tuple(k * c for c in r) for r in a.rows), a.mode)


def bi_mul(a: BiSeries, b: BiSeries) -> BiSeries:
    mode = _same_mode(a, b)
    n = min(a.order, b.order)
    out = [[zero(mode)] * (n + 1) for _ in range(n + 1)]
    brows = b.rows
    for i in range(n + 1):
        arow = a.rows[i]
        for j in range(n + 1):
            aij = arow[j]
            if not aij:
                continue
            for p in range(i, n + 1):
                src = brows[p - i]
                dst = out[p]
                for q in range(j, n + 1):
                    bv = src[q - j]
                    if bv:
                        dst[q] = dst[q] + aij * bv
    return BiSeries(tuple(tuple(r) for r in out), mode)


def _add_constant(a: BiSeries, value) -> BiSeries:
    rows = [list(r) for r in a.rows]
    rows[0][0] = rows[0][0] + value
    return BiSeries(tuple(tuple(r) for r in rows), a.mode)


def difference_quotient(f: Series, polynomial: bool = False) -> BiSeries:
    """``(f(t) - f(z)) / (t - z) = sum_n a_n sum_{i+j=n-1} t^i z^j``.

    Entry ``(i, j)`` equals ``a_{i+j+1}``.  For a truncated series of order
    ``N`` only entries with ``i + j <= N - 1`` are known, so the returned
    grid has order ``(N - 1) // 2``.  With ``polynomial=True`` the input is
    read as an exact polynomial (``a_n = 0`` for ``n > N``) and the grid has
    order ``N - 1``.
    """
    if not f.is_normalized():
        raise ValueError("difference_quotient needs a normalized series (c0 = 0, c1 = 1)")
    n_order = f.order
    m = n_order - 1 if polynomial else (n_order - 1) // 2
    z = zero(f.mode)

    def coeff(k):
        return f.coeffs[k] if k <= n_order else z

    rows = tuple(tuple(coeff(i + j + 1) for j in range(m + 1)) for i in range(m + 1))
    return BiSeries(rows, f.mode)


def bi_log(b: BiSeries) -> BiSeries:
    """Bivariate ``log B`` for ``B(0,0) = 1`` as ``sum_k (-1)^(k+1) H^k / k``, ``H = B - 1``.

    ``H^k`` vanishes on the grid once ``k > 2 * order``, so the sum is finite.
    """
    if b.rows[0][0] != 1:
        raise ValueError(f"bi_log requires constant term 1, got {b.rows[0][0]}")
    h = _add_constant(b, -1)
    top = 2 * b.order
    if top == 0:
        return bi_constant(0, 0, b.mode)
    # Horner: H * (1 - H * (1/2 - H * (1/3 - ...)))
    acc = bi_constant(_series_coeff(top, b.mode), b.order, b.mode)
    for k in range(top - 1, 0, -1):
        acc = _add_constant(bi_mul(h, acc), _series_coeff(k, b.mode))
    return bi_mul(h, acc)


def _series_coeff(k: int, mode: str):
    c = Fraction((-1) ** (k + 1), k)
    return GaussianRational.coerce(c) if mode == EXACT else float(c)


def bi_exp(h: BiSeries) -> BiSeries:
    """Bivariate ``exp H`` for ``H(0,0) = 0``."""
    if h.rows[0][0]:
        raise ValueError("bi_exp requires constant term 0")
    top = 2 * h.order
    inv = (lambda k: GaussianRational(Fraction(1, k))) if h.mode == EXACT else (lambda k: 1.0 / k)
    acc = bi_constant(1, h.order, h.mode)
    for k in range(top, 0, -1):
        acc = _add_constant(bi_scale(bi_mul(h, acc), inv(k)), 1)
    return acc


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def series_to_json(f: Series) -> dict:
    out = {"order": f.order, "mode": f.mode, "coeffs": [scalar_to_pair(c) for c in f.coeffs]}
    if f.mode == EXACT:
        out["exact"] = [scalar_to_exact_pair(c) for c in f.coeffs]
    return out


def series_from_json(data: dict) -> Series:
    mode = data.get("mode", FLOAT)
    if mode == EXACT and "exact" in data:
        values = [GaussianRational(Fraction(re), Fraction(im)) for re, im in data["exact"]]
    else:
        values = [complex(re, im) for re, im in data["coeffs"]]
    return make_series(values, order=data.get("order"), mode=mode)


def biseries_to_json(b: BiSeries) -> dict:
    return {
        "order": b.order,
        "mode": b.mode,
        "coeffs": [[scalar_to_pair(c) for c in r] for r in b.rows],
    }
