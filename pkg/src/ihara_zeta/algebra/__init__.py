"""Exact algebra: Gaussian rationals, polynomials, rational functions, matrices, series."""

from .lemmas import antidiag_inverse, antidiag_matrix, closed_form_inverse, rank_one_inverse, rank_one_matrix
from .matrix import Matrix, NonSquareError, determinant, inverse
from .polynomial import Polynomial, RationalFunction, T, poly_gcd
from .scalar import Scalar, as_scalar, parse_scalar
from .series import TruncatedSeries

__all__ = [
    "Scalar",
    "as_scalar",
    "parse_scalar",
    "Polynomial",
    "RationalFunction",
    "T",
    "poly_gcd",
    "Matrix",
    "NonSquareError",
    "determinant",
    "inverse",
    "TruncatedSeries",
    "rank_one_inverse",
    "antidiag_inverse",
    "rank_one_matrix",
    "antidiag_matrix",
    "closed_form_inverse",
]
