import random
from fractions import Fraction

import pytest

from ihara_zeta.algebra import Polynomial, Scalar, TruncatedSeries

from conftest import rand_scalar


def test_exp_zero():
    assert TruncatedSeries(5, ()).exp() == TruncatedSeries.one(5)


def test_log_mercator():
    geom = TruncatedSeries(4, (1, 1, 1, 1, 1))
    assert geom.log() == TruncatedSeries(4, (0, 1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)))


def test_reciprocal_geometric():
    assert TruncatedSeries(3, (1, -2)).reciprocal() == TruncatedSeries(3, (1, 2, 4, 8))


def test_exp_of_t():
    # exp(t) = sum t^k / k!
    e = TruncatedSeries(5, (0, 1)).exp()
    assert e.coeffs == tuple(Scalar(Fraction(1, f)) for f in (1, 1, 2, 6, 24, 120))


def test_preconditions():
    with pytest.raises(ValueError):
        TruncatedSeries(3, (1, 1)).exp()
    with pytest.raises(ValueError):
        TruncatedSeries(3, (2, 1)).log()
    with pytest.raises(ValueError):
        TruncatedSeries(3, (0, 1)).reciprocal()
    with pytest.raises(ValueError):
        TruncatedSeries(3, ()) + TruncatedSeries(4, ())


def test_exp_log_round_trip():
    rng = random.Random(17)
    for _ in range(30):
        K = rng.randint(0, 8)
        f = TruncatedSeries(K, (1,) + tuple(rand_scalar(rng) for _ in range(K)))
        assert f.log().exp() == f
        g = TruncatedSeries(K, (0,) + tuple(rand_scalar(rng) for _ in range(K)))
        assert g.exp().log() == g


def test_exp_is_homomorphism():
    rng = random.Random(4)
    K = 6
    a = TruncatedSeries(K, (0,) + tuple(rand_scalar(rng) for _ in range(K)))
    b = TruncatedSeries(K, (0,) + tuple(rand_scalar(rng) for _ in range(K)))
    assert (a + b).exp() == a.exp() * b.exp()


def test_reciprocal_product():
    rng = random.Random(9)
    for _ in range(10):
        f = TruncatedSeries(7, (rand_scalar(rng) or Scalar(1),) + tuple(rand_scalar(rng) for _ in range(7)))
        assert f * f.reciprocal() == TruncatedSeries.one(7)


def test_first_difference():
    a = TruncatedSeries(3, (1, 2, 3, 4))
    b = TruncatedSeries(3, (1, 2, 5, 4))
    assert a.first_difference(b) == 2
    assert a.first_difference(a) is None
    assert TruncatedSeries.from_polynomial(Polynomial([1, 2, 3, 4, 5]), 3) == a
