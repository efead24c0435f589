import random

import pytest
from hypothesis import given, settings, strategies as st

from ihara_zeta.algebra import Matrix, Polynomial, RationalFunction, Scalar, T
from ihara_zeta.digraph import Digraph, arc_partition, bracket_set, inverse_set, representative_choices, symmetric_digraph
from ihara_zeta.fixtures import C3_EDGES, LOOPED_TRIANGLE_LABELS, K4_EDGES, looped_triangle
from ihara_zeta.ihara import (
    bass_inverse_zeta,
    build_jkl,
    ihara_data,
    ihara_inverse_zeta,
    upsilon_sum,
    verify_theorem,
)
from ihara_zeta.zeta import WeightAssignment, hashimoto_inverse_zeta, hashimoto_matrix

from conftest import random_multidigraph, random_multigraph_edges

A = {name: i for i, name in enumerate(LOOPED_TRIANGLE_LABELS)}
ONE_MINUS_T2 = Polynomial([1, 0, -1])


def rf(x):
    return RationalFunction(Polynomial([x]))


def block_factor(dg, w, a):
    """1 - upsilon(arc[a]) upsilon(a^-1) t^2, read off the arc's own sets."""
    c = upsilon_sum(w, bracket_set(dg, a)) * upsilon_sum(w, inverse_set(dg, a))
    return RationalFunction(Polynomial([1, 0, -c]))


def expected_ADX(dg, w):
    """Entrywise sums over arcs, built without any block matrices."""
    n, m = dg.vertex_count, dg.arc_count
    A_ = [[rf(0)] * n for _ in range(n)]
    D_ = [[rf(0)] * n for _ in range(n)]
    X_ = [[rf(0)] * n for _ in range(n)]
    for a in range(m):
        u = dg.arcs[a].tail
        A_[u][dg.arcs[a].head] += rf(w.tau2[a] * w.tau1[a])
        f = block_factor(dg, w, a)
        for b in inverse_set(dg, a):
            D_[u][dg.arcs[b].head] += rf(w.tau2[a] * w.upsilon(a, b) * w.tau1[b]) / f
            for c in inverse_set(dg, b):
                X_[u][dg.arcs[c].head] += rf(w.tau2[a] * w.upsilon(a, b) * w.upsilon(b, c) * w.tau1[c]) / f
    return A_, D_, X_


def test_J_blocks_looped_triangle_general():
    g = looped_triangle()
    w = WeightAssignment.random(10, random.Random(1), True)
    data = build_jkl(g, w)
    loop, pair = data.blocks[0], data.blocks[1]
    # loop block: every pair in A_11 is mutually inverse
    assert loop.J == Matrix([[w.upsilon(a, b) for b in (0, 1)] for a in (0, 1)])
    # pair block: bracket {a21,a22} against inverses {a23,a24}
    arcs = pair.block.arcs
    assert arcs == (A["a21"], A["a22"], A["a23"], A["a24"])
    for i, a in enumerate(arcs):
        for j, b in enumerate(arcs):
            want = w.upsilon(a, b) if (i < 2) != (j < 2) else 0
            assert pair.J.entries[i][j] == want
    assert pair.coupling == (w.upsilon(2, 2) + w.upsilon(3, 3)) * (w.upsilon(4, 4) + w.upsilon(5, 5))


def test_J_blocks_symmetric_are_2x2():
    s = looped_triangle("symmetric")
    w = WeightAssignment.random(10, random.Random(2))
    for bd in build_jkl(s, w).blocks:
        a, b = bd.block.arcs
        assert bd.J == Matrix([[0, w.upsilon(a, b)], [w.upsilon(b, a), 0]])


@pytest.mark.parametrize("mode", ["general", "symmetric"])
def test_factorization_KL_minus_J(mode):
    g = looped_triangle(mode)
    w = WeightAssignment.random(10, random.Random(7), True)
    data = build_jkl(g, w)
    assert data.K @ data.L - data.J == hashimoto_matrix(g, w)


@pytest.mark.parametrize("mode", ["general", "symmetric"])
def test_block_inverses(mode):
    g = looped_triangle(mode)
    w = WeightAssignment.random(10, random.Random(8), True)
    data = ihara_data(g, w)
    for bd in data.blocks:
        k = bd.J.rows
        Tb = Matrix.identity(k, RationalFunction) + bd.J.scale(RationalFunction(T))
        assert bd.T_inv @ Tb == Matrix.identity(k, RationalFunction)
        assert Tb.det() == RationalFunction(bd.det)


def test_detT_symmetric_classic():
    for edges, n in ((C3_EDGES, 3), (K4_EDGES, 4)):
        dg = symmetric_digraph(edges, n)
        data = ihara_data(dg, WeightAssignment.ones(dg.arc_count))
        assert data.detT == ONE_MINUS_T2 ** len(edges)


def test_detT_general_loop_block():
    g = looped_triangle()
    data = ihara_data(g, WeightAssignment.ones(10))
    assert data.blocks[0].det == Polynomial([1, 2])
    # {a21,a22} vs {a23,a24}: coupling 2*2
    assert data.blocks[1].det == Polynomial([1, 0, -4])
    assert data.detT == Polynomial([1, 2]) * Polynomial([1, 0, -4]) * ONE_MINUS_T2 ** 2


@pytest.mark.parametrize("mode", ["general", "symmetric"])
@pytest.mark.parametrize("seed", range(3))
def test_ADX_entrywise(mode, seed):
    g = looped_triangle(mode)
    w = WeightAssignment.random(10, random.Random(seed), True)
    data = ihara_data(g, w)
    A_, D_, X_ = expected_ADX(g, w)
    assert data.A.astype(RationalFunction) == Matrix(A_, RationalFunction)
    assert data.D == Matrix(D_, RationalFunction)
    assert data.X == Matrix(X_, RationalFunction)


def test_X_diagonal_from_loop_block():
    g = looped_triangle()
    w = WeightAssignment.random(10, random.Random(5))
    data = ihara_data(g, w)
    assert data.X.entries[0][0] != 0


def test_zero_inverse_weights():
    g = looped_triangle()
    w = WeightAssignment.random(10, random.Random(6)).replace(upsilon1=(0,) * 10, upsilon2=(0,) * 10)
    data = ihara_data(g, w)
    assert data.D.is_zero() and data.X.is_zero()
    assert data.detT == Polynomial.one()
    assert ihara_inverse_zeta(g, w) == hashimoto_inverse_zeta(g, w)


def test_all_zero_weights():
    g = looped_triangle("symmetric")
    data = ihara_data(g, WeightAssignment.zeros(10))
    assert data.A.is_zero() and data.D.is_zero() and data.X.is_zero()
    assert ihara_inverse_zeta(g, WeightAssignment.zeros(10)) == 1


def test_classic_D_X_are_degree_and_adjacency():
    # symmetric classic: D (1-t^2) = degree matrix, X (1-t^2) = adjacency matrix
    for edges, n in ((C3_EDGES, 3), (K4_EDGES, 4), (((0, 1), (0, 1), (1, 2)), 3)):
        dg = symmetric_digraph(edges, n)
        data = ihara_data(dg, WeightAssignment.ones(dg.arc_count))
        f = RationalFunction(ONE_MINUS_T2)
        for u in range(n):
            for v in range(n):
                adj = sum(1 for e in edges if e in ((u, v), (v, u)))
                deg = sum((e[0] == u) + (e[1] == u) for e in edges) if u == v else 0
                assert data.D.entries[u][v] * f == deg
                assert data.X.entries[u][v] * f == adj
                assert data.A.entries[u][v] == adj


@pytest.mark.parametrize("edges,n", [(C3_EDGES, 3), (K4_EDGES, 4), (((0, 1), (0, 1), (1, 2), (0, 2)), 3)])
def test_bass_form(edges, n):
    dg = symmetric_digraph(edges, n)
    w = WeightAssignment.ones(dg.arc_count)
    ih = ihara_inverse_zeta(dg, w)
    assert ih == bass_inverse_zeta(edges, n)
    assert ih.num == hashimoto_inverse_zeta(dg, w)


def test_bass_rejects_loops():
    with pytest.raises(ValueError):
        bass_inverse_zeta([(0, 0)], 1)


def test_one_sided_pair():
    dg = Digraph.from_pairs(3, [(0, 1), (1, 2), (2, 0), (0, 1)])
    w = WeightAssignment.random(4, random.Random(9), True)
    data = ihara_data(dg, w)
    assert data.detT == 1 and data.D.is_zero()
    assert ihara_inverse_zeta(dg, w, data=data) == hashimoto_inverse_zeta(dg, w)


def test_representative_independence():
    g = looped_triangle()
    w = WeightAssignment.random(10, random.Random(12), True)
    ref = hashimoto_inverse_zeta(g, w)
    choices = representative_choices(g)
    for p01 in choices[(0, 1)]:
        for p00 in choices[(0, 0)]:
            part = arc_partition(g, {(0, 1): p01, (0, 0): p00})
            assert ihara_inverse_zeta(g, w, part) == ref


def test_vertex_relabelling_invariance():
    g = looped_triangle()
    w = WeightAssignment.random(10, random.Random(13), True)
    ref = ihara_inverse_zeta(g, w)
    for perm in ((1, 2, 0), (2, 0, 1), (0, 2, 1)):
        h = Digraph.from_pairs(3, [(perm[a.tail], perm[a.head]) for a in g.arcs])
        assert ihara_inverse_zeta(h, w) == ref


@pytest.mark.parametrize("mode", ["general", "symmetric"])
def test_degree_and_constant_term(mode):
    g = looped_triangle(mode)
    for seed in range(3):
        w = WeightAssignment.random(10, random.Random(seed), True)
        p = ihara_inverse_zeta(g, w).num
        assert p.degree <= 10 and p[0] == 1


def test_verify_theorem_report():
    g = looped_triangle()
    w = WeightAssignment.random(10, random.Random(14), True)
    rep = verify_theorem(g, w, 6)
    assert rep.passed and rep.first_divergence == {}
    bad = w.replace(tau1=(Scalar(7, 3),) + w.tau1[1:])
    rep = verify_theorem(g, w, 6, ihara_weights=bad)
    assert not rep.passed and "ihara" in rep.first_divergence


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_ihara_equals_hashimoto_random(seed, symmetric):
    rng = random.Random(seed)
    if symmetric:
        edges, n = random_multigraph_edges(rng)
        dg = symmetric_digraph(edges, n)
    else:
        dg = random_multidigraph(rng, 4, 8)
    w = WeightAssignment.random(dg.arc_count, rng, complex_weights=rng.random() < 0.5)
    assert ihara_inverse_zeta(dg, w) == hashimoto_inverse_zeta(dg, w)
