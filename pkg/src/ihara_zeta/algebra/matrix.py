"""Dense matrices over the exact rings of this package, with determinants.

Entries may be :class:`Scalar`, :class:`Polynomial` or
:class:`RationalFunction`; the ring is given explicitly so empty and all-zero
matrices still know their zero and one.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .polynomial import Polynomial, RationalFunction, poly_gcd
from .scalar import Scalar, as_scalar

__all__ = ["Matrix", "determinant", "inverse", "NonSquareError"]

_RINGS = (Scalar, Polynomial, RationalFunction)


class NonSquareError(ValueError):
    pass


def _convert(x, ring):
    if isinstance(x, ring):
        return x
    if ring is Scalar:
        return as_scalar(x)
    if ring is Polynomial:
        if isinstance(x, RationalFunction):
            if not x.is_polynomial():
                raise TypeError("rational function entry is not a polynomial")
            return x.num
        return Polynomial([as_scalar(x)])
    return RationalFunction(x)


class Matrix:
    """Row-major dense matrix.  Treat instances as immutable."""

    __slots__ = ("rows", "cols", "ring", "entries")

    def __init__(self, entries: Iterable[Iterable], ring=Scalar, cols: int | None = None):
        if ring not in _RINGS:
            raise TypeError(f"unsupported ring {ring!r}")
        rows = [[_convert(x, ring) for x in row] for row in entries]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self.ring = ring
        self.entries = rows

    @classmethod
    def _wrap(cls, entries: list, ring, cols: int) -> "Matrix":
        m = object.__new__(cls)
        m.rows, m.cols, m.ring, m.entries = len(entries), cols, ring, entries
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int, ring=Scalar) -> "Matrix":
        z = ring.zero()
        return cls._wrap([[z] * cols for _ in range(rows)], ring, cols)

    @classmethod
    def identity(cls, n: int, ring=Scalar) -> "Matrix":
        z, o = ring.zero(), ring.one()
        return cls._wrap([[o if i == j else z for j in range(n)] for i in range(n)], ring, n)

    @classmethod
    def from_function(cls, rows: int, cols: int, f: Callable[[int, int], object], ring=Scalar) -> "Matrix":
        return cls([[f(i, j) for j in range(cols)] for i in range(rows)], ring, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> list:
        return list(self.entries[i])

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    __hash__ = None

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.entries)
        return f"Matrix<{self.ring.__name__}>({self.rows}x{self.cols})[{body}]"

    def astype(self, ring) -> "Matrix":
        if ring is self.ring:
            return self
        return Matrix(self.entries, ring, self.cols)

    def _binary_ring(self, other: "Matrix"):
        if self.ring is other.ring:
            return self, other
        order = {Scalar: 0, Polynomial: 1, RationalFunction: 2}
        ring = max(self.ring, other.ring, key=order.__getitem__)
        return self.astype(ring), other.astype(ring)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        a, b = self._binary_ring(other)
        return Matrix._wrap(
            [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a.entries, b.entries)], a.ring, a.cols
        )

    def __neg__(self) -> "Matrix":
        return Matrix._wrap([[-x for x in r] for r in self.entries], self.ring, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a, b = self._binary_ring(other)
        z = a.ring.zero()
        bt = list(zip(*b.entries)) if b.rows else [()] * b.cols
        out = []
        for ra in a.entries:
            row = []
            for cb in bt:
                acc = z
                for x, y in zip(ra, cb):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix._wrap(out, a.ring, b.cols)

    def scale(self, c) -> "Matrix":
        """Multiply every entry by ``c``; the result ring follows ``c``."""
        if isinstance(c, RationalFunction) or self.ring is RationalFunction:
            ring = RationalFunction
        elif isinstance(c, Polynomial) or self.ring is Polynomial:
            ring = Polynomial
        else:
            ring = Scalar
        base = self.astype(ring)
        return Matrix._wrap([[c * x for x in r] for r in base.entries], ring, self.cols)

    def __pow__(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise NonSquareError("power of a non-square matrix")
        result, base = Matrix.identity(self.rows, self.ring), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix._wrap([list(c) for c in zip(*self.entries)] if self.rows else [], self.ring, self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._wrap([[self.entries[i][j] for j in cols] for i in rows], self.ring, len(cols))

    def trace(self):
        if self.rows != self.cols:
            raise NonSquareError("trace of a non-square matrix")
        acc = self.ring.zero()
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def det(self):
        return determinant(self)

    def inverse(self) -> "Matrix":
        return inverse(self)


def determinant(M: Matrix):
    """Exact determinant.

    Polynomial matrices use fraction-free Bareiss elimination; rational
    function matrices are cleared of row denominators first and then go
    through the same path; scalar matrices use plain Gaussian elimination.
    """
    if M.rows != M.cols:
        raise NonSquareError(f"determinant of a {M.rows}x{M.cols} matrix")
    if M.ring is Scalar:
        return _det_field(M)
    if M.ring is Polynomial:
        return _det_bareiss([list(r) for r in M.entries])
    return _det_rational(M)


def _det_field(M: Matrix):
    n = M.rows
    a = [list(r) for r in M.entries]
    det = M.ring.one()
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k]), None)
        if p is None:
            return M.ring.zero()
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        pivot = a[k][k]
        det = det * pivot
        inv = pivot.inverse()
        for i in range(k + 1, n):
            if not a[i][k]:
                continue
            f = a[i][k] * inv
            ak, ai = a[k], a[i]
            for j in range(k + 1, n):
                if ak[j]:
                    ai[j] = ai[j] - f * ak[j]
    return det


def _det_bareiss(a: list) -> Polynomial:
    n = len(a)
    if n == 0:
        return Polynomial.one()
    sign = 1
    prev = Polynomial.one()
    for k in range(n - 1):
        if not a[k][k]:
            # lowest-degree nonzero pivot keeps intermediate degrees down
            cands = [i for i in range(k + 1, n) if a[i][k]]
            if not cands:
                return Polynomial.zero()
            p = min(cands, key=lambda i: a[i][k].degree)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        pivot = a[k][k]
        ak = a[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                v = pivot * ai[j]
                if aik and ak[j]:
                    v = v - aik * ak[j]
                ai[j] = v.exact_div(prev) if prev.degree > 0 or prev.lead != Scalar.one() else v
            ai[k] = Polynomial.zero()
        prev = pivot
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def _det_rational(M: Matrix) -> RationalFunction:
    rows = []
    scale = Polynomial.one()
    for r in M.entries:
        lcm = Polynomial.one()
        for x in r:
            if not x.den.is_constant():
                lcm = _lcm(lcm, x.den)
        rows.append([x.num * lcm.exact_div(x.den) for x in r])
        scale = scale * lcm
    return RationalFunction(_det_bareiss(rows), scale)


def _lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def inverse(M: Matrix) -> Matrix:
    """Gauss-Jordan inverse over a field ring (Scalar or RationalFunction).

    Polynomial matrices are promoted to rational functions.
    """
    if M.rows != M.cols:
        raise NonSquareError("inverse of a non-square matrix")
    ring = RationalFunction if M.ring is Polynomial else M.ring
    n = M.rows
    a = [list(r) for r in M.astype(ring).entries]
    inv = [list(r) for r in Matrix.identity(n, ring).entries]
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[k], a[p] = a[p], a[k]
        inv[k], inv[p] = inv[p], inv[k]
        f = a[k][k].inverse()
        a[k] = [x * f for x in a[k]]
        inv[k] = [x * f for x in inv[k]]
        for i in range(n):
            if i == k or not a[i][k]:
                continue
            g = a[i][k]
            a[i] = [x - g * y if y else x for x, y in zip(a[i], a[k])]
            inv[i] = [x - g * y if y else x for x, y in zip(inv[i], inv[k])]
    return Matrix._wrap(inv, ring, n)
