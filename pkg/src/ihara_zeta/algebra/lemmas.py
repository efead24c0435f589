"""Closed-form inverses of ``I + tM`` for the two structured shapes of ``M``.

Both shapes satisfy a two-term power law (``M^2 = mu M`` for the rank-one
case, ``M^(2n+1) = (mu1 mu2)^n M`` for the anti-diagonal case), so the
Neumann series of ``(I + tM)^-1`` collapses to three terms.
"""

from __future__ import annotations

from typing import Sequence

from .matrix import Matrix
from .polynomial import Polynomial, RationalFunction, T
from .scalar import Scalar, as_scalar

__all__ = ["rank_one_inverse", "antidiag_inverse", "rank_one_matrix", "antidiag_matrix", "closed_form_inverse"]


def _dot(u, v) -> Scalar:
    acc = Scalar.zero()
    for x, y in zip(u, v):
        acc = acc + x * y
    return acc


def rank_one_matrix(m1: Sequence, m2: Sequence) -> Matrix:
    m1 = [as_scalar(x) for x in m1]
    m2 = [as_scalar(x) for x in m2]
    return Matrix([[a * b for b in m2] for a in m1])


def antidiag_matrix(m1: Sequence, m2: Sequence, k: int) -> Matrix:
    """``[[0, M1], [M2, 0]]`` with ``M1[i][j] = m1[i] m2[k+j]``, ``M2[i][j] = m1[k+i] m2[j]``."""
    m1 = [as_scalar(x) for x in m1]
    m2 = [as_scalar(x) for x in m2]
    n = len(m1)
    if len(m2) != n:
        raise ValueError("m1 and m2 must have equal length")
    if not 0 <= k <= n:
        raise ValueError(f"block split k={k} out of range for length {n}")
    z = Scalar.zero()

    def entry(i, j):
        if (i < k) == (j < k):
            return z
        return m1[i] * m2[j]

    return Matrix.from_function(n, n, entry)


def closed_form_inverse(M: Matrix, c: Scalar) -> Matrix:
    """``I - t M / (1 - c t^2) + t^2 M^2 / (1 - c t^2)`` over rational functions."""
    n = M.rows
    factor = RationalFunction(Polynomial.one(), Polynomial([1, 0, -as_scalar(c)]))
    lin = M.scale(RationalFunction(-T) * factor)
    quad = (M @ M).scale(RationalFunction(T * T) * factor)
    return Matrix.identity(n, RationalFunction) + lin + quad


def rank_one_inverse(m1: Sequence, m2: Sequence):
    """Inverse and determinant of ``I + tM`` for ``M[i][j] = m1[i] m2[j]``.

    Returns ``(inverse, det)`` with ``det = 1 + mu t``, ``mu = trace(M)``.
    """
    if len(m1) != len(m2) or not m1:
        raise ValueError("m1 and m2 must be nonempty and of equal length")
    M = rank_one_matrix(m1, m2)
    mu = M.trace()
    inv = closed_form_inverse(M, mu * mu)
    return inv, RationalFunction(Polynomial([1, mu]))


def antidiag_inverse(m1: Sequence, m2: Sequence, k: int):
    """Inverse and determinant of ``I + tM`` for the anti-diagonal block shape.

    Returns ``(inverse, det)`` with ``det = 1 - mu1 mu2 t^2`` where ``mu1``
    sums ``m1[i] m2[i]`` over the first ``k`` indices and ``mu2`` over the rest.
    """
    M = antidiag_matrix(m1, m2, k)
    m1 = [as_scalar(x) for x in m1]
    m2 = [as_scalar(x) for x in m2]
    mu1 = _dot(m1[:k], m2[:k])
    mu2 = _dot(m1[k:], m2[k:])
    c = mu1 * mu2
    inv = closed_form_inverse(M, c)
    return inv, RationalFunction(Polynomial([1, 0, -c]))
