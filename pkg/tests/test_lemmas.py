import random

import pytest

from ihara_zeta.algebra import (
    Matrix,
    Polynomial,
    RationalFunction,
    Scalar,
    T,
    antidiag_inverse,
    antidiag_matrix,
    determinant,
    inverse,
    rank_one_inverse,
    rank_one_matrix,
)

from conftest import rand_scalar


def _I_plus_tM(M):
    return Matrix.identity(M.rows, Polynomial) + M.scale(T)


def test_rank_one_zero():
    inv, det = rank_one_inverse([0, 0, 0], [0, 0, 0])
    assert inv == Matrix.identity(3, RationalFunction)
    assert det == 1


def test_rank_one_scalar_case():
    inv, det = rank_one_inverse([2], [3])
    assert det == 1 + 6 * T
    # closed form 1 - 6t/(1-36t^2) + 36t^2/(1-36t^2) collapses to 1/(1+6t)
    f = Polynomial([1, 0, -36])
    closed = RationalFunction(1) - RationalFunction(6 * T, f) + RationalFunction(36 * T * T, f)
    assert inv[0, 0] == closed == RationalFunction(1, 1 + 6 * T)
    assert _I_plus_tM(Matrix([[6]])).astype(RationalFunction) @ inv == Matrix.identity(1, RationalFunction)


def test_rank_one_matches_generic_inverse():
    rng = random.Random(31)
    m1 = [rand_scalar(rng) for _ in range(3)]
    m2 = [rand_scalar(rng) for _ in range(3)]
    inv, det = rank_one_inverse(m1, m2)
    M = rank_one_matrix(m1, m2)
    assert inv == inverse(_I_plus_tM(M))
    assert determinant(_I_plus_tM(M)) == det.num


def test_rank_one_power_law():
    rng = random.Random(8)
    M = rank_one_matrix([rand_scalar(rng) for _ in range(4)], [rand_scalar(rng) for _ in range(4)])
    mu = M.trace()
    for n in range(1, 6):
        assert M ** n == M.scale(mu ** (n - 1))


def test_antidiag_all_ones():
    inv, det = antidiag_inverse([1, 1], [1, 1], 1)
    assert det == 1 - T * T
    M = antidiag_matrix([1, 1], [1, 1], 1)
    assert _I_plus_tM(M).astype(RationalFunction) @ inv == Matrix.identity(2, RationalFunction)


def test_antidiag_nilpotent():
    rng = random.Random(2)
    m1 = [rand_scalar(rng) for _ in range(5)]
    m2 = [rand_scalar(rng) for _ in range(2)] + [Scalar(0)] * 3
    inv, det = antidiag_inverse(m1, m2, 2)
    M = antidiag_matrix(m1, m2, 2)
    assert det == 1
    assert inv == Matrix.identity(5, RationalFunction) - M.scale(RationalFunction(T))


def test_antidiag_matches_generic_inverse():
    rng = random.Random(41)
    m1 = [rand_scalar(rng) for _ in range(5)]
    m2 = [rand_scalar(rng) for _ in range(5)]
    inv, det = antidiag_inverse(m1, m2, 2)
    M = antidiag_matrix(m1, m2, 2)
    assert inv == inverse(_I_plus_tM(M))
    assert determinant(_I_plus_tM(M)) == det.num


def test_antidiag_one_sided_block():
    # l = 0: the block is all zero
    inv, det = antidiag_inverse([1, 2], [3, 4], 2)
    assert det == 1 and inv == Matrix.identity(2, RationalFunction)


def test_antidiag_bad_split():
    with pytest.raises(ValueError):
        antidiag_inverse([1, 2], [3, 4], 3)
    with pytest.raises(ValueError):
        rank_one_inverse([1], [1, 2])


def test_antidiag_power_laws():
    rng = random.Random(77)
    for _ in range(10):
        k, l = rng.randint(1, 4), rng.randint(1, 4)
        m1 = [rand_scalar(rng) for _ in range(k + l)]
        m2 = [rand_scalar(rng) for _ in range(k + l)]
        M = antidiag_matrix(m1, m2, k)
        c = sum((m1[i] * m2[i] for i in range(k)), Scalar(0)) * sum((m1[i] * m2[i] for i in range(k, k + l)), Scalar(0))
        M2 = M @ M
        for n in range(1, 5):
            assert M ** (2 * n) == M2.scale(c ** (n - 1))
            assert M ** (2 * n + 1) == M.scale(c ** n)
