"""Exact Gaussian rationals.

A value ``(a + b i) / d`` is stored as three Python integers with ``d > 0``
and ``gcd(a, b, d) == 1``, which keeps equality structural and avoids the
overhead of two independent :class:`fractions.Fraction` objects.  The real
and imaginary parts are still available as reduced fractions.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

__all__ = ["Scalar", "as_scalar", "parse_scalar"]


class Scalar:
    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "Scalar":
        # d must already be positive
        s = object.__new__(cls)
        s._set(a, b, d)
        return s

    @classmethod
    def zero(cls) -> "Scalar":
        return _ZERO

    @classmethod
    def one(cls) -> "Scalar":
        return _ONE

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "Scalar":
        return Scalar._raw(self._a, -self._b, self._d)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._d == other._d:
            return Scalar._raw(self._a + other._a, self._b + other._b, self._d)
        return Scalar._raw(
            self._a * other._d + other._a * self._d,
            self._b * other._d + other._b * self._d,
            self._d * other._d,
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        if b1 == 0 and b2 == 0:
            return Scalar._raw(a1 * a2, 0, self._d * other._d)
        return Scalar._raw(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        a, b, d = self._a, self._b, self._d
        norm = a * a + b * b
        if norm == 0:
            raise ZeroDivisionError("Scalar division by zero")
        # d / (a + bi) = d (a - bi) / (a^2 + b^2)
        return Scalar._raw(d * a, -d * b, norm)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = _ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._a == other._a and self._b == other._b and self._d == other._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __complex__(self):
        return complex(self._a / self._d, self._b / self._d)

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return str(re_)
        if re_ == 0:
            return f"{im_}i"
        sign = "+" if im_ > 0 else "-"
        return f"{re_}{sign}{abs(im_)}i"


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar._raw(x, 0, 1)
    if isinstance(x, Fraction):
        return Scalar._raw(x.numerator, 0, x.denominator)
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Convert an int, Fraction, Scalar or exact string to a Scalar."""
    if isinstance(x, str):
        return parse_scalar(x)
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to an exact Scalar")
    return s


_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?P<re>[+-]?{_RAT})?(?:(?P<isign>[+-])?(?P<im>{_RAT})?i)?$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p/q"``, ``"p/q+r/si"``, ``"r/si"`` or ``"i"``.

    Raises ValueError on malformed input or a zero denominator.
    """
    s = text.strip().replace(" ", "")
    m = _SCALAR_RE.match(s)
    if not s or m is None or (m.group("re") is None and not s.endswith("i")):
        raise ValueError(f"malformed exact scalar {text!r}")
    has_im = s.endswith("i")
    if has_im and m.group("re") is not None and m.group("isign") is None:
        # "3i" matches with re="3"; reparse as a pure imaginary
        return parse_scalar("0" + (s if s[0] in "+-" else "+" + s))
    try:
        re_ = Fraction(m.group("re")) if m.group("re") else Fraction(0)
        im_ = Fraction(0)
        if has_im:
            im_ = Fraction(m.group("im")) if m.group("im") else Fraction(1)
            if m.group("isign") == "-":
                im_ = -im_
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    return Scalar(re_, im_)


_ZERO = Scalar._raw(0, 0, 1)
_ONE = Scalar._raw(1, 0, 1)
