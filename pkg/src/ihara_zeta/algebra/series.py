"""Power series truncated at a fixed order ``K`` (coefficients of t^0..t^K)."""

from __future__ import annotations

from dataclasses import dataclass

from .polynomial import Polynomial
from .scalar import Scalar, as_scalar

__all__ = ["TruncatedSeries"]


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be non-negative")
        c = [as_scalar(x) for x in self.coeffs[: self.order + 1]]
        c += [Scalar.zero()] * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> "TruncatedSeries":
        return cls(order, p.coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (1,))

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k]

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = as_scalar(other)
            return TruncatedSeries(self.order, tuple(c * a for a in self.coeffs))
        self._check(other)
        K = self.order
        a, b = self.coeffs, other.coeffs
        out = [Scalar.zero()] * (K + 1)
        for i in range(K + 1):
            if not a[i]:
                continue
            for j in range(K + 1 - i):
                if b[j]:
                    out[i + j] = out[i + j] + a[i] * b[j]
        return TruncatedSeries(K, tuple(out))

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedSeries":
        a = self.coeffs
        if not a[0]:
            raise ValueError("reciprocal needs a nonzero constant term")
        inv0 = a[0].inverse()
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = Scalar.zero()
            for k in range(1, n + 1):
                if a[k]:
                    acc = acc + a[k] * out[n - k]
            out.append(-acc * inv0)
        return TruncatedSeries(self.order, tuple(out))

    def exp(self) -> "TruncatedSeries":
        """exp via f' = g' f, i.e. n f_n = sum_k k g_k f_{n-k}."""
        g = self.coeffs
        if g[0]:
            raise ValueError("exp needs a zero constant term")
        f = [Scalar.one()]
        for n in range(1, self.order + 1):
            acc = Scalar.zero()
            for k in range(1, n + 1):
                if g[k]:
                    acc = acc + k * g[k] * f[n - k]
            f.append(acc / n)
        return TruncatedSeries(self.order, tuple(f))

    def log(self) -> "TruncatedSeries":
        """Inverse of :meth:`exp`; needs constant term 1."""
        f = self.coeffs
        if f[0] != 1:
            raise ValueError("log needs constant term 1")
        g = [Scalar.zero()]
        for n in range(1, self.order + 1):
            acc = n * f[n]
            for k in range(1, n):
                if g[k] and f[n - k]:
                    acc = acc - k * g[k] * f[n - k]
            g.append(acc / n)
        return TruncatedSeries(self.order, tuple(g))

    def first_difference(self, other: "TruncatedSeries") -> int | None:
        """Index of the first differing coefficient, or None if equal."""
        self._check(other)
        for k, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return k
        return None

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)
