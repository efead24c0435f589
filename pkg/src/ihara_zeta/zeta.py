"""The weight theta, the edge matrix M_theta, and the exponential, Euler and
Hashimoto expressions of the zeta function, with brute-force path oracles.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Matrix, Polynomial, Scalar, T, TruncatedSeries, as_scalar, determinant
from .digraph import Digraph, arc_partition, inverse_set

__all__ = [
    "WeightAssignment",
    "OracleLimitError",
    "oracle_cap",
    "theta",
    "hashimoto_matrix",
    "hashimoto_inverse_zeta",
    "enumerate_closed_paths",
    "circ",
    "theta_table",
    "n_k",
    "n_k_bruteforce",
    "exponential_expression",
    "enumerate_prime_cycles",
    "canonical_rotation",
    "is_prime_path",
    "euler_expression",
    "AdjacencyReport",
    "adjacency_condition_check",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 10
DEFAULT_ORACLE_CAP = 10**6


class OracleLimitError(RuntimeError):
    """An enumeration oracle exceeded its path budget."""


def oracle_cap() -> int:
    """Path budget for enumeration oracles; ``ZETA_ORACLE_CAP`` overrides it."""
    env = os.environ.get("ZETA_ORACLE_CAP")
    return int(env) if env else DEFAULT_ORACLE_CAP


@dataclass(frozen=True)
class WeightAssignment:
    """The four arc weight maps, stored as tuples indexed by arc id."""

    tau1: tuple
    tau2: tuple
    upsilon1: tuple
    upsilon2: tuple

    def __post_init__(self):
        lens = set()
        for name in ("tau1", "tau2", "upsilon1", "upsilon2"):
            vals = tuple(as_scalar(x) for x in getattr(self, name))
            object.__setattr__(self, name, vals)
            lens.add(len(vals))
        if len(lens) > 1:
            raise ValueError("weight maps must all have the same length")

    def __len__(self):
        return len(self.tau1)

    @classmethod
    def constant(cls, m: int, value=1) -> "WeightAssignment":
        v = (as_scalar(value),) * m
        return cls(v, v, v, v)

    @classmethod
    def ones(cls, m: int) -> "WeightAssignment":
        return cls.constant(m, 1)

    @classmethod
    def zeros(cls, m: int) -> "WeightAssignment":
        return cls.constant(m, 0)

    @classmethod
    def random(cls, m: int, rng: random.Random, complex_weights: bool = False) -> "WeightAssignment":
        """Small rationals: numerators in [-9, 9], denominators in [1, 9]."""

        def draw():
            re = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            im = Fraction(rng.randint(-9, 9), rng.randint(1, 9)) if complex_weights else 0
            return Scalar(re, im)

        return cls(*(tuple(draw() for _ in range(m)) for _ in range(4)))

    def replace(self, **maps) -> "WeightAssignment":
        d = {k: getattr(self, k) for k in ("tau1", "tau2", "upsilon1", "upsilon2")}
        d.update(maps)
        return WeightAssignment(**d)

    def tau(self, a: int, b: int) -> Scalar:
        return self.tau1[a] * self.tau2[b]

    def upsilon(self, a: int, b: int) -> Scalar:
        return self.upsilon1[a] * self.upsilon2[b]

    def check(self, dg: Digraph) -> None:
        if len(self) != dg.arc_count:
            raise ValueError(f"weights cover {len(self)} arcs, digraph has {dg.arc_count}")


def theta(dg: Digraph, w: WeightAssignment, a: int, b: int) -> Scalar:
    """tau(a,b)[head(a) = tail(b)] - upsilon(a,b)[b in a^-1]."""
    val = Scalar.zero()
    if dg.arcs[a].head == dg.arcs[b].tail:
        val = w.tau(a, b)
    if b in inverse_set(dg, a):
        val = val - w.upsilon(a, b)
    return val


def hashimoto_matrix(dg: Digraph, w: WeightAssignment, order: Sequence[int] | None = None) -> Matrix:
    """M_theta with rows and columns in ``order`` (default: block-grouped partition order)."""
    w.check(dg)
    if order is None:
        order = arc_partition(dg).arc_order
    order = tuple(order)
    inv = [inverse_set(dg, a) for a in range(dg.arc_count)]
    rows = []
    for a in order:
        head = dg.arcs[a].head
        row = []
        for b in order:
            val = w.tau(a, b) if head == dg.arcs[b].tail else Scalar.zero()
            if b in inv[a]:
                val = val - w.upsilon(a, b)
            row.append(val)
        rows.append(row)
    return Matrix(rows, Scalar, len(order))


def hashimoto_inverse_zeta(dg: Digraph, w: WeightAssignment) -> Polynomial:
    """det(I - t M_theta), the reciprocal of the Hashimoto expression."""
    M = hashimoto_matrix(dg, w)
    m = M.rows
    one = Polynomial.one()
    rows = [
        [(one if i == j else Polynomial.zero()) - T.scale(M.entries[i][j]) for j in range(m)]
        for i in range(m)
    ]
    return determinant(Matrix(rows, Polynomial, m))


# closed paths and cycles ----------------------------------------------------


def _successors(dg: Digraph) -> list[list[int]]:
    out_by_vertex: list[list[int]] = [[] for _ in range(dg.vertex_count)]
    for a in dg.arcs:
        out_by_vertex[a.tail].append(a.id)
    return [out_by_vertex[a.head] for a in dg.arcs]


def _closed_paths(dg: Digraph, k: int, cap: int, min_start: bool = False):
    """Yield closed paths of length k; with ``min_start`` only those whose
    first arc has the smallest id (every rotation class keeps at least one)."""
    succ = _successors(dg)
    count = 0
    for s in range(dg.arc_count):
        tail_s = dg.arcs[s].tail
        path = [s]
        stack = [iter(succ[s])]
        while stack:
            if len(path) == k:
                if dg.arcs[path[-1]].head == tail_s:
                    count += 1
                    if count > cap:
                        raise OracleLimitError(f"more than {cap} closed paths of length {k}")
                    yield tuple(path)
                stack.pop()
                path.pop()
                continue
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                path.pop()
                continue
            if min_start and nxt < s:
                continue
            path.append(nxt)
            stack.append(iter(succ[nxt]))


def enumerate_closed_paths(dg: Digraph, k: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """All closed paths of length ``k`` as arc-id tuples, by depth-first search."""
    if k < 1:
        raise ValueError("closed paths have length >= 1")
    return list(_closed_paths(dg, k, oracle_cap() if cap is None else cap))


def theta_table(dg: Digraph, w: WeightAssignment) -> list[list[Scalar]]:
    """theta(a, b) for all arc pairs, indexed by arc id (pairwise, not via M_theta)."""
    w.check(dg)
    m = dg.arc_count
    return [[theta(dg, w, a, b) for b in range(m)] for a in range(m)]


def circ(dg: Digraph, w: WeightAssignment, path: Sequence[int], table=None) -> Scalar:
    """Circular product theta(c1,c2) ... theta(ck,c1)."""
    acc = Scalar.one()
    k = len(path)
    for i in range(k):
        x = table[path[i]][path[(i + 1) % k]] if table is not None else theta(dg, w, path[i], path[(i + 1) % k])
        if not x:
            return Scalar.zero()
        acc = acc * x
    return acc


def n_k(dg: Digraph, w: WeightAssignment, k: int) -> Scalar:
    """N_k = trace(M_theta^k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return (hashimoto_matrix(dg, w) ** k).trace()


def n_k_bruteforce(dg: Digraph, w: WeightAssignment, k: int, cap: int | None = None) -> Scalar:
    table = theta_table(dg, w)
    acc = Scalar.zero()
    for p in enumerate_closed_paths(dg, k, cap):
        acc = acc + circ(dg, w, p, table)
    return acc


def exponential_expression(dg: Digraph, w: WeightAssignment, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """exp(sum_k N_k t^k / k) truncated at ``order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    M = hashimoto_matrix(dg, w)
    coeffs = [Scalar.zero()]
    P = Matrix.identity(M.rows)
    for k in range(1, order + 1):
        P = P @ M
        coeffs.append(P.trace() / k)
    return TruncatedSeries(order, tuple(coeffs)).exp()


def canonical_rotation(path: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation."""
    p = tuple(path)
    return min(p[i:] + p[:i] for i in range(len(p)))


def is_prime_path(path: Sequence[int]) -> bool:
    """True unless the path is the (k/d)-th power of its length-d prefix for a proper divisor d."""
    p = tuple(path)
    k = len(p)
    for d in range(1, k):
        if k % d == 0 and p[:d] * (k // d) == p:
            return False
    return True


def enumerate_prime_cycles(dg: Digraph, maxlen: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """One rotation-minimal representative per prime cycle of length <= maxlen."""
    if maxlen < 1:
        raise ValueError("maxlen must be >= 1")
    cap = oracle_cap() if cap is None else cap
    out = []
    for k in range(1, maxlen + 1):
        for p in _closed_paths(dg, k, cap, min_start=True):
            if canonical_rotation(p) == p and is_prime_path(p):
                out.append(p)
    return out


def euler_expression(dg: Digraph, w: WeightAssignment, order: int = DEFAULT_ORDER, cap: int | None = None,
                     cycles: Sequence[Sequence[int]] | None = None) -> TruncatedSeries:
    """Product over prime cycles C with |C| <= order of 1/(1 - circ(C) t^|C|), truncated.

    ``cycles`` may pass a precomputed ``enumerate_prime_cycles(dg, order)``;
    the enumeration does not depend on the weights, so repeated draws can share it.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    f = [Scalar.one()] + [Scalar.zero()] * order
    if order == 0:
        return TruncatedSeries(0, tuple(f))
    table = theta_table(dg, w)
    if cycles is None:
        cycles = enumerate_prime_cycles(dg, order, cap)
    # cycles come out of the DFS in order, so consecutive ones share prefixes;
    # prods[j] holds theta(c0,c1) ... theta(c_{j-1},c_j) for the current prefix
    prev: tuple = ()
    prods = [Scalar.one()]
    for c in cycles:
        L = len(c)
        if L > order:
            continue
        keep = 1
        while keep < min(L, len(prev), len(prods)) and c[keep] == prev[keep] and c[0] == prev[0]:
            keep += 1
        del prods[keep:]
        for j in range(keep, L):
            prods.append(prods[-1] * table[c[j - 1]][c[j]])
        prev = tuple(c)
        x = prods[L - 1] * table[c[L - 1]][c[0]]
        if not x:
            continue
        # multiply in place by 1/(1 - x t^L)
        for n in range(L, order + 1):
            if f[n - L]:
                f[n] = f[n] + x * f[n - L]
    return TruncatedSeries(order, tuple(f))


@dataclass
class AdjacencyReport:
    passed: bool
    violations: list = field(default_factory=list)


def adjacency_condition_check(dg: Digraph, w: WeightAssignment | None = None, matrix: Matrix | None = None,
                              order: Sequence[int] | None = None) -> AdjacencyReport:
    """Confirm theta(a, b) != 0 implies head(a) == tail(b) for every arc pair.

    ``matrix`` replaces M_theta (rows/cols indexed by ``order``, default arc
    id order); this is how a deliberately broken matrix is checked.
    """
    if matrix is None:
        if w is None:
            raise ValueError("need weights or an explicit matrix")
        order = tuple(range(dg.arc_count))
        matrix = hashimoto_matrix(dg, w, order)
    elif order is None:
        order = tuple(range(dg.arc_count))
    bad = []
    for i, a in enumerate(order):
        for j, b in enumerate(order):
            if matrix.entries[i][j] and dg.arcs[a].head != dg.arcs[b].tail:
                bad.append((a, b))
    return AdjacencyReport(not bad, bad)
