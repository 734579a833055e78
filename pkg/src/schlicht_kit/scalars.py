"""Scalar modes: exact Gaussian rationals and double-precision complex floats.

Every series in the package carries a mode tag.  In ``"exact"`` mode the
coefficients are :class:`GaussianRational` values; in ``"float"`` mode they
are plain Python ``complex`` numbers.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Union

EXACT = "exact"
FLOAT = "float"
MODES = (EXACT, FLOAT)

DEFAULT_TOLERANCE = 1e-9


class ModeError(ValueError):
    """Raised when scalars or series of different modes are mixed."""


class GaussianRational:
    """Exact complex rational ``(re + im*i) / den`` with integer parts.

    Stored in lowest terms with a positive denominator, so structural
    equality is value equality.
    """

    __slots__ = ("_re", "_im", "_den")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        re = Fraction(re)
        im = Fraction(im)
        den = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        self._set(re.numerator * (den // re.denominator), im.numerator * (den // im.denominator), den)

    def _set(self, a: int, b: int, d: int) -> None:
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        self._re, self._im, self._den = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        obj = cls.__new__(cls)
        obj._set(a, b, d)
        return obj

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return cls._raw(value, 0, 1)
        if isinstance(value, Rational):
            return cls._raw(value.numerator, 0, value.denominator)
        if isinstance(value, str):
            return parse_scalar(value, EXACT)
        raise TypeError(f"cannot represent {value!r} exactly")

    # -- accessors -------------------------------------------------------
    @property
    def real(self) -> Fraction:
        return Fraction(self._re, self._den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._im, self._den)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._re, -self._im, self._den)

    def abs2(self) -> Fraction:
        """Squared modulus, always exact."""
        return Fraction(self._re * self._re + self._im * self._im, self._den * self._den)

    def __abs__(self) -> Union[Fraction, float]:
        n = self._re * self._re + self._im * self._im
        r = math.isqrt(n)
        if r * r == n:
            return Fraction(r, self._den)
        return math.sqrt(n) / self._den

    def __complex__(self) -> complex:
        return complex(self._re / self._den, self._im / self._den)

    def __bool__(self) -> bool:
        return self._re != 0 or self._im != 0

    # -- arithmetic -------------------------------------------------------
    def _other(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return GaussianRational.coerce(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = self._den * o._den
        return GaussianRational._raw(self._re * o._den + o._re * self._den,
                                     self._im * o._den + o._im * self._den, d)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._re, -self._im, self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b, c, e = self._re, self._im, o._re, o._im
        return GaussianRational._raw(a * c - b * e, a * e + b * c, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        n = o._re * o._re + o._im * o._im
        if n == 0:
            raise ZeroDivisionError("division by exact zero")
        a, b, c, e = self._re, self._im, o._re, -o._im
        return GaussianRational._raw((a * c - b * e) * o._den, (a * e + b * c) * o._den, self._den * n)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else GaussianRational._raw(1, 0, 1) / self
        result = GaussianRational._raw(1, 0, 1)
        for _ in range(abs(k)):
            result = result * base
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) == other
            return NotImplemented
        return (self._re, self._im, self._den) == (o._re, o._im, o._den)

    def __hash__(self):
        if self._im == 0:
            return hash(Fraction(self._re, self._den))
        return hash((self._re, self._im, self._den))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        re_, im_ = self.real, self.imag
        if im_ == 0:
            return str(re_)
        if re_ == 0:
            return f"{im_}j"
        sign = "+" if im_ > 0 else "-"
        return f"{re_}{sign}{abs(im_)}j"


Scalar = Union[GaussianRational, complex]

_SCALAR_RE = re.compile(
    r"""^\s*
    (?:(?P<re>[+-]?\d+(?:\.\d*)?(?:/\d+)?)(?![\d./]*j))?
    \s*
    (?:(?P<im>[+-]?(?:\d+(?:\.\d*)?(?:/\d+)?)?)j)?
    \s*$""",
    re.VERBOSE,
)


def parse_scalar(text: str, mode: str):
    """Parse ``"3"``, ``"-1/3"``, ``"2j"`` or ``"1/2-3/4j"`` into a scalar of ``mode``."""
    if mode == FLOAT and "/" not in text:
        try:
            z = complex(text.replace(" ", ""))
        except ValueError:
            z = None
        if z is not None:
            return to_scalar(z, FLOAT)
    m = _SCALAR_RE.match(text)
    if m is None or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"cannot parse scalar {text!r}")
    re_txt = m.group("re") or "0"
    im_txt = m.group("im")
    if im_txt is None:
        im_txt = "0"
    elif im_txt in ("", "+", "-"):
        im_txt = im_txt + "1"
    if mode == EXACT:
        if "." in re_txt or "." in im_txt:
            raise ValueError(f"decimal literal {text!r} in exact mode; use p/q")
        return GaussianRational(Fraction(re_txt), Fraction(im_txt))
    check_mode(mode)
    return to_scalar(complex(float(Fraction(re_txt)), float(Fraction(im_txt))), FLOAT)


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ModeError(f"unknown scalar mode {mode!r}; expected one of {MODES}")
    return mode


def to_scalar(value, mode: str):
    """Coerce ``value`` into the scalar type of ``mode``."""
    if mode == EXACT:
        if isinstance(value, (float, complex)):
            raise ModeError(f"floating scalar {value!r} in exact mode")
        return GaussianRational.coerce(value)
    check_mode(mode)
    if isinstance(value, str):
        return parse_scalar(value, FLOAT)
    z = complex(value)
    if not cmath.isfinite(z):
        raise ValueError(f"non-finite scalar {value!r}")
    return z


def zero(mode: str):
    return GaussianRational._raw(0, 0, 1) if mode == EXACT else 0j


def one(mode: str):
    return GaussianRational._raw(1, 0, 1) if mode == EXACT else 1 + 0j


def modulus(z):
    """|z|; a ``Fraction`` for exact scalars whose modulus is rational, else float."""
    if isinstance(z, GaussianRational):
        return abs(z)
    if isinstance(z, Rational):
        return abs(Fraction(z))
    return abs(complex(z))


def modulus2(z):
    """|z|^2, exact for exact scalars."""
    if isinstance(z, GaussianRational):
        return z.abs2()
    if isinstance(z, Rational):
        return Fraction(z) ** 2
    z = complex(z)
    return z.real * z.real + z.imag * z.imag


def as_complex(z) -> complex:
    return complex(z)


def is_close(a, b, tol: float = DEFAULT_TOLERANCE) -> bool:
    """Absolute comparison; exact scalars compare exactly when both are exact."""
    if isinstance(a, (GaussianRational, Rational)) and isinstance(b, (GaussianRational, Rational)):
        if tol == 0:
            return GaussianRational.coerce(a) == GaussianRational.coerce(b)
    return abs(complex(a) - complex(b)) <= tol


def real_to_json(x):
    """JSON number for a real (Fraction or float)."""
    return float(x)


def scalar_to_pair(z) -> list:
    c = complex(z)
    return [c.real, c.imag]


def scalar_to_exact_pair(z: GaussianRational) -> list:
    return [str(z.real), str(z.imag)]
