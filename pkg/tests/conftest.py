import itertools
import random
from fractions import Fraction

import pytest
from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from ihara_zeta.algebra import Matrix, Polynomial, Scalar
from ihara_zeta.digraph import Digraph, bracket_set, inverse_set
from ihara_zeta.fixtures import all_fixtures


def to_qq_i(x: Scalar):
    return QQ_I(QQ_I.dom.convert(x.re), QQ_I.dom.convert(x.im))


def sympy_det_one_minus_tM(M: Matrix) -> Polynomial:
    """det(I - tM) from sympy's characteristic polynomial over QQ_I.

    det(I - tM) = t^m charpoly(1/t), so the charpoly coefficients (leading
    first) are the ascending coefficients of det(I - tM).
    """
    if M.rows == 0:
        return Polynomial.one()
    dm = DomainMatrix([[to_qq_i(x) for x in row] for row in M.entries], M.shape, QQ_I)
    out = []
    for c in dm.charpoly():
        out.append(Scalar(Fraction(int(c.x.numerator), int(c.x.denominator)), Fraction(int(c.y.numerator), int(c.y.denominator))))
    return Polynomial(out)


def leibniz_det(rows, zero, one):
    """Determinant by the permutation expansion; brute-force oracle."""
    n = len(rows)
    total = zero
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = one
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term if inv % 2 == 0 else total - term
    return total


def rand_scalar(rng: random.Random, complex_: bool = True) -> Scalar:
    re = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    im = Fraction(rng.randint(-9, 9), rng.randint(1, 9)) if complex_ else 0
    return Scalar(re, im)


def rand_poly(rng: random.Random, deg: int, complex_: bool = False) -> Polynomial:
    return Polynomial([rand_scalar(rng, complex_) for _ in range(deg + 1)])


@pytest.fixture(scope="session")
def fixtures():
    return all_fixtures()


def random_multidigraph(rng: random.Random, n_max: int = 6, m_max: int = 12):
    n = rng.randint(1, n_max)
    m = rng.randint(0, m_max)
    return Digraph.from_pairs(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])


def random_multigraph_edges(rng: random.Random, n_max: int = 5, e_max: int = 6, loops: bool = True):
    n = rng.randint(1, n_max)
    edges = []
    for _ in range(rng.randint(0, e_max)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v and not loops:
            continue
        edges.append((u, v))
    return edges, n


def check_partition_invariants(dg, p):
    seen = []
    for b in p.blocks:
        seen += b.arcs
    assert sorted(seen) == list(range(dg.arc_count)), "blocks must be a disjoint cover"
    assert list(p.arc_order) == seen
    for (u, v) in p.phi:
        assert u <= v
        assert dg.arcs_between(u, v) or dg.arcs_between(v, u)
    for b in p.blocks:
        a = b.representative
        assert set(b.arcs) == bracket_set(dg, a) | inverse_set(dg, a)
        assert set(b.arcs[: b.split]) == bracket_set(dg, a)
        u, v = b.pair
        if dg.is_symmetric:
            assert set(b.arcs) == {a, dg.involution[a]}
        elif u == v:
            assert set(b.arcs) == set(dg.arcs_between(u, u))
        else:
            assert set(b.arcs) == set(dg.arcs_between(u, v)) | set(dg.arcs_between(v, u))
    for a in range(dg.arc_count):
        for b in range(dg.arc_count):
            if not dg.is_symmetric:
                assert (b in inverse_set(dg, a)) == (a in inverse_set(dg, b))
            if b in bracket_set(dg, a):
                assert bracket_set(dg, b) == bracket_set(dg, a)
                assert inverse_set(dg, b) == inverse_set(dg, a)
        if dg.is_symmetric:
            assert inverse_set(dg, a) == {dg.involution[a]}
            assert dg.involution[dg.involution[a]] == a
