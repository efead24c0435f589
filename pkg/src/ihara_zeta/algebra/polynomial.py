"""Dense univariate polynomials in ``t`` and rational functions over Gaussian rationals."""

from __future__ import annotations

from .scalar import Scalar, as_scalar

__all__ = ["Polynomial", "RationalFunction", "T"]

_Z = Scalar.zero()
_ONE = Scalar.one()


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``t**i``.

    The zero polynomial has no coefficients, so two polynomials are equal
    exactly when their coefficient tuples are.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim([as_scalar(c) for c in coeffs])

    @classmethod
    def _from_trimmed(cls, coeffs: tuple) -> "Polynomial":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return _PZERO

    @classmethod
    def one(cls) -> "Polynomial":
        return _PONE

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, c, k: int) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else _Z

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _Z

    def __len__(self):
        return len(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, RationalFunction):
            return other == self
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == _trim([c])

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if not c.is_real() and c.re != 0:
                cs = f"({cs})"
            if k == 0:
                terms.append(cs)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                terms.append(mono if cs == "1" else ("-" + mono if cs == "-1" else f"{cs}*{mono}"))
        return " + ".join(terms).replace("+ -", "- ")

    # ring operations ------------------------------------------------------

    @staticmethod
    def _lift(x):
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, RationalFunction):
            return NotImplemented
        try:
            return Polynomial._from_trimmed(_trim([as_scalar(x)]))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._from_trimmed(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_trimmed(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        if not isinstance(other, Polynomial):
            try:
                c = as_scalar(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _PZERO
        out = [_Z] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Polynomial._from_trimmed(_trim(out))

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = as_scalar(c)
        if not c:
            return _PZERO
        return Polynomial._from_trimmed(tuple(x * c for x in self.coeffs))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = _PONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return _PZERO, self
        inv_lead = other.lead.inverse()
        quot = [_Z] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if not c:
                continue
            q = c * inv_lead
            quot[k] = q
            for j, y in enumerate(bc):
                if y:
                    rem[k + j] = rem[k + j] - q * y
        return Polynomial._from_trimmed(_trim(quot)), Polynomial._from_trimmed(_trim(rem[:db]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lead = self.lead
        if lead == _ONE:
            return self
        return self.scale(lead.inverse())

    def __call__(self, x):
        """Evaluate by Horner's rule."""
        acc = _Z
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def truncate(self, order: int) -> "Polynomial":
        """Drop every term of degree greater than ``order``."""
        return Polynomial._from_trimmed(_trim(list(self.coeffs[: order + 1])))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) is 0."""
    while b:
        a, b = b, a % b
    return a.monic()


class RationalFunction:
    """A canonical fraction ``num / den`` of polynomials.

    ``den`` is monic and coprime to ``num``; zero is ``0 / 1``.  Canonical
    form makes ``==`` a structural comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = _PONE if den is None else _as_poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _from_canonical(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls._from_canonical(_PZERO, _PONE)

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls._from_canonical(_PONE, _PONE)

    def is_polynomial(self) -> bool:
        return self.den == _PONE

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        try:
            other = _as_poly(other)
        except TypeError:
            return NotImplemented
        return self.den == _PONE and self.num == other

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == _PONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    @staticmethod
    def _lift(x):
        if isinstance(x, RationalFunction):
            return x
        try:
            return RationalFunction._from_canonical(_as_poly(x), _PONE)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._from_canonical(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RationalFunction.zero()
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._from_canonical(self.num**n, self.den**n)


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, RationalFunction):
        if x.den != _PONE:
            raise TypeError("rational function is not a polynomial")
        return x.num
    return Polynomial([as_scalar(x)])


def _canonical(num: Polynomial, den: Polynomial):
    if not num:
        return _PZERO, _PONE
    if den.is_constant():
        c = den.lead
        return (num if c == _ONE else num.scale(c.inverse())), _PONE
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    c = den.lead
    if c != _ONE:
        c = c.inverse()
        num, den = num.scale(c), den.scale(c)
    return num, den


_PZERO = Polynomial._from_trimmed(())
_PONE = Polynomial._from_trimmed((_ONE,))

#: The indeterminate.
T = Polynomial._from_trimmed((_Z, _ONE))
