"""The Ihara expression: det(I - t M_theta) = det T * det(I - tA + t^2 D - t^3 X).

``J`` carries the inverse-arc part of theta, ``K L`` the adjacency part, and
``T = I + tJ`` is block diagonal over the arc partition, so its inverse and
determinant are known block by block in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (
    Matrix,
    Polynomial,
    RationalFunction,
    Scalar,
    T,
    TruncatedSeries,
    antidiag_inverse,
    closed_form_inverse,
    determinant,
    rank_one_inverse,
)
from .digraph import ArcPartition, Block, Digraph, arc_partition, inverse_set
from .zeta import (
    DEFAULT_ORDER,
    WeightAssignment,
    euler_expression,
    exponential_expression,
    hashimoto_inverse_zeta,
)

__all__ = [
    "IharaConsistencyError",
    "BlockData",
    "IharaData",
    "upsilon_sum",
    "build_jkl",
    "block_T",
    "ihara_matrices",
    "ihara_data",
    "ihara_inverse_zeta",
    "bass_inverse_zeta",
    "TheoremReport",
    "verify_theorem",
]


class IharaConsistencyError(ArithmeticError):
    """The Ihara product did not collapse to a polynomial."""


def upsilon_sum(w: WeightAssignment, arcs) -> Scalar:
    """upsilon(S) = sum over a in S of upsilon1(a) upsilon2(a)."""
    acc = Scalar.zero()
    for a in arcs:
        acc = acc + w.upsilon(a, a)
    return acc


@dataclass
class BlockData:
    block: Block
    J: Matrix  # |arc(a)| x |arc(a)|
    K: Matrix  # |arc(a)| x n
    L: Matrix  # n x |arc(a)|
    coupling: Scalar  # upsilon(arc[a]) * upsilon(a^-1)
    det: Polynomial | None = None
    T_inv: Matrix | None = None

    @property
    def factor(self) -> Polynomial:
        """1 - upsilon(arc[a]) upsilon(a^-1) t^2."""
        return Polynomial([1, 0, -self.coupling])


@dataclass
class IharaData:
    partition: ArcPartition
    J: Matrix
    K: Matrix
    L: Matrix
    blocks: list[BlockData]
    A: Matrix | None = None
    D: Matrix | None = None
    X: Matrix | None = None
    detT: Polynomial | None = None


def build_jkl(dg: Digraph, w: WeightAssignment, partition: ArcPartition | None = None) -> IharaData:
    """Fill J, K, L in the partition's block-grouped arc order."""
    w.check(dg)
    partition = partition or arc_partition(dg)
    n, order = dg.vertex_count, partition.arc_order
    z = Scalar.zero()

    inv = {a: inverse_set(dg, a) for a in order}

    def j_entry(a, b):
        return w.upsilon(a, b) if b in inv[a] else z

    def K_rows(arcs):
        return [[w.tau1[a] if dg.arcs[a].head == v else z for v in range(n)] for a in arcs]

    def L_rows(arcs):
        return [[w.tau2[b] if dg.arcs[b].tail == u else z for b in arcs] for u in range(n)]

    blocks = []
    for blk in partition.blocks:
        arcs = blk.arcs
        J_b = Matrix([[j_entry(a, b) for b in arcs] for a in arcs], Scalar, len(arcs))
        coupling = upsilon_sum(w, blk.bracket) * upsilon_sum(w, _inverse_arcs(dg, blk))
        blocks.append(BlockData(blk, J_b, Matrix(K_rows(arcs), Scalar, n), Matrix(L_rows(arcs), Scalar, len(arcs)), coupling))

    # full J: entries outside the diagonal blocks are zero by construction
    m = len(order)
    J = Matrix.zeros(m, m)
    start = 0
    for bd in blocks:
        size = bd.J.rows
        for i in range(size):
            for j in range(size):
                J.entries[start + i][start + j] = bd.J.entries[i][j]
        start += size
    J_full = Matrix([[j_entry(a, b) for b in order] for a in order], Scalar, m)
    if J_full != J:
        raise IharaConsistencyError("J is not block diagonal under the partition order")
    return IharaData(partition, J, Matrix(K_rows(order), Scalar, n), Matrix(L_rows(order), Scalar, m), blocks)


def _inverse_arcs(dg: Digraph, blk: Block) -> tuple[int, ...]:
    """a^-1 for the block representative (may overlap arc[a] for general loops)."""
    return tuple(sorted(inverse_set(dg, blk.representative)))


def block_T(dg: Digraph, w: WeightAssignment, data: IharaData) -> Polynomial:
    """Blockwise inverses and determinants of T = I + tJ; returns det T.

    General-mode loop blocks are rank one (1 + upsilon(A_ww) t); every other
    block is anti-diagonal (1 - upsilon(arc[a]) upsilon(a^-1) t^2).  The
    product is cross-checked against a direct determinant of I + tJ.
    """
    detT = Polynomial.one()
    for bd in data.blocks:
        blk = bd.block
        m1 = [w.upsilon1[a] for a in blk.arcs]
        m2 = [w.upsilon2[a] for a in blk.arcs]
        if not dg.is_symmetric and blk.is_loop_block:
            inv, det = rank_one_inverse(m1, m2)
        else:
            inv, det = antidiag_inverse(m1, m2, blk.split)
        # the shape-specific inverse must match I - tJ/f + t^2 J^2/f for this block
        if inv != closed_form_inverse(bd.J, bd.coupling):
            raise IharaConsistencyError(f"block inverse mismatch at representative {blk.representative}")
        bd.det = det.num
        bd.T_inv = inv
        detT = detT * det.num
    m = data.J.rows
    direct = determinant(Matrix.identity(m, Polynomial) + data.J.scale(T))
    if direct != detT:
        raise IharaConsistencyError("product of block determinants differs from det(I + tJ)")
    data.detT = detT
    return detT


def ihara_matrices(dg: Digraph, w: WeightAssignment, data: IharaData):
    """A = sum L K, D = sum L J K / f, X = sum L J^2 K / f with f the block factor."""
    n = dg.vertex_count
    A = Matrix.zeros(n, n)
    D = Matrix.zeros(n, n, RationalFunction)
    X = Matrix.zeros(n, n, RationalFunction)
    for bd in data.blocks:
        LK = bd.L @ bd.K
        LJ = bd.L @ bd.J
        LJK = LJ @ bd.K
        LJJK = LJ @ bd.J @ bd.K
        f = RationalFunction(Polynomial.one(), bd.factor)
        A = A + LK
        D = D + LJK.scale(f)
        X = X + LJJK.scale(f)
    data.A, data.D, data.X = A, D, X
    return A, D, X


def ihara_data(dg: Digraph, w: WeightAssignment, partition: ArcPartition | None = None) -> IharaData:
    data = build_jkl(dg, w, partition)
    block_T(dg, w, data)
    ihara_matrices(dg, w, data)
    return data


def ihara_inverse_zeta(dg: Digraph, w: WeightAssignment, partition: ArcPartition | None = None,
                       data: IharaData | None = None) -> RationalFunction:
    """det T * det(I - tA + t^2 D - t^3 X), canonicalized.

    Raises IharaConsistencyError if the result keeps a nontrivial denominator.
    """
    if data is None:
        data = ihara_data(dg, w, partition)
    n = dg.vertex_count
    t = RationalFunction(T)
    M = (
        Matrix.identity(n, RationalFunction)
        - data.A.scale(t)
        + data.D.scale(t * t)
        - data.X.scale(t * t * t)
    )
    value = RationalFunction(data.detT) * determinant(M)
    if not value.is_polynomial():
        raise IharaConsistencyError(f"Ihara expression has denominator {value.den}")
    return value


def bass_inverse_zeta(edges: Sequence[tuple[int, int]], n: int) -> RationalFunction:
    """Classical (1 - t^2)^(m - n) det(I - t A_G + t^2 (D_G - I)) of a loopless graph."""
    adj = [[0] * n for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValueError("the classical formula here is for loopless graphs")
        adj[u][v] += 1
        adj[v][u] += 1
    deg = [sum(r) for r in adj]
    rows = [
        [Polynomial([int(i == j), -adj[i][j], (deg[i] - 1) if i == j else 0]) for j in range(n)]
        for i in range(n)
    ]
    det = determinant(Matrix(rows, Polynomial, n))
    return RationalFunction(det) * RationalFunction(Polynomial([1, 0, -1])) ** (len(edges) - n)


@dataclass
class TheoremReport:
    order: int
    hashimoto: Polynomial
    ihara: RationalFunction
    detT: Polynomial
    exponential: TruncatedSeries
    euler: TruncatedSeries
    ihara_equal: bool
    series_equal: bool
    first_divergence: dict = field(default_factory=dict)
    data: IharaData | None = None

    @property
    def passed(self) -> bool:
        return self.ihara_equal and self.series_equal


def verify_theorem(dg: Digraph, w: WeightAssignment, order: int = DEFAULT_ORDER,
                   partition: ArcPartition | None = None,
                   ihara_weights: WeightAssignment | None = None,
                   cycles: Sequence[Sequence[int]] | None = None) -> TheoremReport:
    """Compare Hashimoto, Ihara, exponential and Euler expressions.

    Passes iff the Ihara value equals det(I - t M_theta) exactly and both
    series agree with 1/det(I - t M_theta) through ``t^order``.
    ``ihara_weights`` substitutes weights on the Ihara side only, a hook
    for fault-injection tests.  ``cycles`` is passed on to the Euler product.
    """
    h = hashimoto_inverse_zeta(dg, w)
    data = ihara_data(dg, ihara_weights or w, partition)
    try:
        ih = ihara_inverse_zeta(dg, ihara_weights or w, data=data)
        ihara_ok = ih.num == h
    except IharaConsistencyError:
        ih, ihara_ok = None, False
    recip = TruncatedSeries.from_polynomial(h, order).reciprocal()
    ex = exponential_expression(dg, w, order)
    eu = euler_expression(dg, w, order, cycles=cycles)
    div = {}
    for name, s in (("exponential", ex), ("euler", eu)):
        k = s.first_difference(recip)
        if k is not None:
            div[name] = k
    if not ihara_ok:
        p = ih.num if ih is not None else Polynomial.zero()
        top = max(len(p), len(h))
        div["ihara"] = next(k for k in range(top) if p[k] != h[k]) if top else 0
    return TheoremReport(order, h, ih, data.detT, ex, eu, ihara_ok, "exponential" not in div and "euler" not in div, div, data)
