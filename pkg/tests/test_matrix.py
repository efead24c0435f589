import random

import pytest

from ihara_zeta.algebra import Matrix, NonSquareError, Polynomial, RationalFunction, Scalar, T, determinant, inverse

from conftest import leibniz_det, rand_poly, rand_scalar


def test_identity_det():
    assert determinant(Matrix.identity(3)) == 1
    assert determinant(Matrix.identity(0)) == 1
    assert determinant(Matrix.identity(0, Polynomial)) == 1


def test_two_by_two_polynomial():
    M = Matrix([[1, T], [T, 1]], Polynomial)
    assert determinant(M) == 1 - T * T


def test_all_ones_rank_one():
    # det(I + tM) for the 2x2 all-ones matrix is 1 + 2t
    M = Matrix.identity(2, Polynomial) + Matrix([[1, 1], [1, 1]]).scale(T)
    assert determinant(M) == 1 + 2 * T


def test_non_square():
    with pytest.raises(NonSquareError):
        determinant(Matrix([[1, 2]]))


def test_zero_pivot_needs_swap():
    M = Matrix([[0, 1, 0], [1, 0, 0], [0, 0, T]], Polynomial)
    assert determinant(M) == -T
    S = Matrix([[0, 2], [3, 0]])
    assert determinant(S) == -6


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_bareiss_matches_leibniz(n):
    rng = random.Random(100 + n)
    for _ in range(3):
        rows = [[rand_poly(rng, rng.randint(0, 2), complex_=(n % 2 == 0)) for _ in range(n)] for _ in range(n)]
        assert determinant(Matrix(rows, Polynomial)) == leibniz_det(rows, Polynomial.zero(), Polynomial.one())


def test_scalar_det_matches_leibniz():
    rng = random.Random(5)
    for n in range(1, 6):
        rows = [[rand_scalar(rng) for _ in range(n)] for _ in range(n)]
        assert determinant(Matrix(rows)) == leibniz_det(rows, Scalar.zero(), Scalar.one())


def test_rational_det_matches_leibniz():
    rng = random.Random(11)
    for n in range(1, 4):
        rows = [
            [RationalFunction(rand_poly(rng, 1), rand_poly(rng, 1) or Polynomial.one()) for _ in range(n)]
            for _ in range(n)
        ]
        assert determinant(Matrix(rows, RationalFunction)) == leibniz_det(
            rows, RationalFunction.zero(), RationalFunction.one()
        )


def test_determinant_multiplicative():
    rng = random.Random(2024)
    for n in range(1, 6):
        A = Matrix([[rand_poly(rng, 1) for _ in range(n)] for _ in range(n)], Polynomial)
        B = Matrix([[rand_poly(rng, 1) for _ in range(n)] for _ in range(n)], Polynomial)
        assert determinant(A @ B) == determinant(A) * determinant(B)


def test_inverse_scalar_and_rational():
    rng = random.Random(3)
    A = Matrix([[rand_scalar(rng) for _ in range(4)] for _ in range(4)])
    assert A @ inverse(A) == Matrix.identity(4)
    P = Matrix.identity(3, Polynomial) + Matrix([[rand_scalar(rng) for _ in range(3)] for _ in range(3)]).scale(T)
    Pinv = inverse(P)
    assert Pinv.ring is RationalFunction
    assert P.astype(RationalFunction) @ Pinv == Matrix.identity(3, RationalFunction)


def test_singular_inverse():
    with pytest.raises(ZeroDivisionError):
        inverse(Matrix([[1, 2], [2, 4]]))


def test_power_and_trace():
    M = Matrix([[0, 1], [1, 0]])
    assert M ** 2 == Matrix.identity(2)
    assert (M ** 3).trace() == 0
    assert (M ** 0) == Matrix.identity(2)
