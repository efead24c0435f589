"""Finite multidigraphs, symmetric digraphs of graphs, and the arc partition.

Vertices are the integers ``0..n-1`` and their natural order is the fixed
total order.  Arcs are identified by their position in the arc list.  A
digraph is either *general* (inverse arcs of ``a = (u, v)`` are all arcs
``v -> u``) or the *symmetric digraph* of a graph, in which case it carries
an explicit fixed-point-free involution ``a -> a_bar``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Arc",
    "Digraph",
    "Block",
    "ArcPartition",
    "DigraphError",
    "symmetric_digraph",
    "inverse_set",
    "bracket_set",
    "arc_partition",
    "representative_choices",
]


class DigraphError(ValueError):
    """Raised for malformed digraphs or invalid representative choices."""


@dataclass(frozen=True)
class Arc:
    id: int
    tail: int
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class Digraph:
    """Vertex-ordered multidigraph.

    ``involution`` is ``None`` for a general digraph; otherwise it maps every
    arc id to its reverse partner and the digraph is read as Delta(G).
    """

    vertex_count: int
    arcs: tuple[Arc, ...]
    involution: tuple[int, ...] | None = None
    _by_pair: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise DigraphError("negative vertex count")
        arcs = tuple(self.arcs)
        object.__setattr__(self, "arcs", arcs)
        by_pair: dict[tuple[int, int], list[int]] = {}
        for i, a in enumerate(arcs):
            if a.id != i:
                raise DigraphError(f"arc ids must be dense: position {i} has id {a.id}")
            if not (0 <= a.tail < n and 0 <= a.head < n):
                raise DigraphError(f"arc {i} endpoint out of range for {n} vertices")
            by_pair.setdefault((a.tail, a.head), []).append(i)
        object.__setattr__(self, "_by_pair", {k: tuple(v) for k, v in by_pair.items()})
        if self.involution is not None:
            inv = tuple(self.involution)
            object.__setattr__(self, "involution", inv)
            if len(inv) != len(arcs):
                raise DigraphError("involution must be total on the arc set")
            for i, j in enumerate(inv):
                if not 0 <= j < len(arcs) or j == i or inv[j] != i:
                    raise DigraphError(f"involution is not a fixed-point-free pairing at arc {i}")
                if arcs[j].tail != arcs[i].head or arcs[j].head != arcs[i].tail:
                    raise DigraphError(f"arcs {i} and {j} are paired but not reverse to each other")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]], involution=None) -> "Digraph":
        """Build from ``(tail, head)`` pairs in arc-id order."""
        return cls(n, tuple(Arc(i, u, v) for i, (u, v) in enumerate(pairs)), involution)

    @property
    def is_symmetric(self) -> bool:
        return self.involution is not None

    @property
    def mode(self) -> str:
        return "symmetric" if self.is_symmetric else "general"

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def arcs_between(self, u: int, v: int) -> tuple[int, ...]:
        """Ids of the arcs ``u -> v`` (the set A_uv), ascending."""
        return self._by_pair.get((u, v), ())

    def as_general(self) -> "Digraph":
        """Same arcs, read as a general digraph."""
        return Digraph(self.vertex_count, self.arcs)

    def with_involution(self, involution: Sequence[int]) -> "Digraph":
        return Digraph(self.vertex_count, self.arcs, tuple(involution))


def symmetric_digraph(edges: Iterable[tuple[int, int]], n: int) -> Digraph:
    """Symmetric digraph of a multigraph.

    Edge ``i = {u, v}`` gives arcs ``2i = (u, v)`` and ``2i + 1 = (v, u)``,
    paired by the involution.  A loop gives two distinct paired loops.
    """
    pairs = []
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError(f"edge {e} endpoint out of range for {n} vertices")
        pairs += [(u, v), (v, u)]
    inv = [i + 1 if i % 2 == 0 else i - 1 for i in range(len(pairs))]
    return Digraph.from_pairs(n, pairs, inv)


def inverse_set(dg: Digraph, a: int) -> frozenset[int]:
    """The inverse arcs of ``a``: ``{a_bar}`` or A_{head(a), tail(a)}."""
    if dg.is_symmetric:
        return frozenset((dg.involution[a],))
    arc = dg.arcs[a]
    return frozenset(dg.arcs_between(arc.head, arc.tail))


def bracket_set(dg: Digraph, a: int) -> frozenset[int]:
    """Arcs sharing the inverse set of ``a``: ``{a}`` or A_{tail(a), head(a)}."""
    if dg.is_symmetric:
        return frozenset((a,))
    arc = dg.arcs[a]
    return frozenset(dg.arcs_between(arc.tail, arc.head))


@dataclass(frozen=True)
class Block:
    """One block arc(a) = arc[a] u a^-1 of the partition.

    ``arcs`` lists ``bracket`` first (representative leading), then the
    inverse arcs not already in the bracket.
    """

    pair: tuple[int, int]
    representative: int
    bracket: tuple[int, ...]
    inverse: tuple[int, ...]
    arcs: tuple[int, ...]

    @property
    def is_loop_block(self) -> bool:
        return self.pair[0] == self.pair[1]

    @property
    def split(self) -> int:
        """Number of leading arcs that belong to arc[a]."""
        return len(self.bracket)


@dataclass(frozen=True)
class ArcPartition:
    phi: tuple[tuple[int, int], ...]
    representatives: Mapping[tuple[int, int], tuple[int, ...]]
    blocks: tuple[Block, ...]
    arc_order: tuple[int, ...]

    def position(self) -> dict[int, int]:
        """Arc id -> row index under ``arc_order``."""
        return {a: i for i, a in enumerate(self.arc_order)}

    def block_slices(self) -> list[slice]:
        out, start = [], 0
        for b in self.blocks:
            out.append(slice(start, start + len(b.arcs)))
            start += len(b.arcs)
        return out


def _phi(dg: Digraph) -> list[tuple[int, int]]:
    pairs = {(min(a.tail, a.head), max(a.tail, a.head)) for a in dg.arcs}
    return sorted(pairs)


def _rep_source(dg: Digraph, u: int, v: int) -> tuple[int, ...]:
    # B(u,v) is drawn from A_uv when nonempty, otherwise from A_vu
    return dg.arcs_between(u, v) or dg.arcs_between(v, u)


def representative_choices(dg: Digraph) -> dict[tuple[int, int], list[tuple[int, ...]]]:
    """Every valid B(u, v) per pair of Phi, for exhaustive independence checks.

    General mode: one arc from A_uv (or A_vu).  Symmetric mode: a set of
    arcs meeting every pair {a, a_bar} inside the source set exactly once.
    """
    out = {}
    for u, v in _phi(dg):
        src = _rep_source(dg, u, v)
        if not dg.is_symmetric:
            out[(u, v)] = [(a,) for a in src]
            continue
        # pairs inside src needing a choice; only symmetric loops pair within A_uu
        fixed, pairs = [], []
        seen = set()
        for a in src:
            if a in seen:
                continue
            b = dg.involution[a]
            if b in src:
                pairs.append((a, b))
                seen.update((a, b))
            else:
                fixed.append(a)
                seen.add(a)
        combos = [tuple(fixed)]
        for p in pairs:
            combos = [c + (x,) for c in combos for x in p]
        out[(u, v)] = [tuple(sorted(c)) for c in combos]
    return out


def arc_partition(dg: Digraph, representatives: Mapping[tuple[int, int], Sequence[int]] | None = None) -> ArcPartition:
    """Decompose the arc set into blocks arc(a), a in B(u, v), (u, v) in Phi.

    By default each B(u, v) takes the lowest-id arc of every bracket class
    not already covered.  ``representatives`` overrides the choice for any
    pair; an override that does not yield a partition raises DigraphError.
    """
    representatives = dict(representatives or {})
    phi = _phi(dg)
    covered: set[int] = set()
    blocks = []
    reps_out = {}
    for u, v in phi:
        src = _rep_source(dg, u, v)
        if (u, v) in representatives:
            reps = tuple(representatives[(u, v)])
            if any(a not in src for a in reps):
                raise DigraphError(f"representatives for {(u, v)} must lie in the source arc set")
        else:
            reps, seen = [], set()
            for a in src:
                if a in seen:
                    continue
                reps.append(a)
                seen |= bracket_set(dg, a) | inverse_set(dg, a)
            reps = tuple(reps)
        for a in reps:
            bracket = sorted(bracket_set(dg, a))
            bracket.remove(a)
            bracket = (a, *bracket)
            inv = tuple(sorted(inverse_set(dg, a) - set(bracket)))
            arcs = bracket + inv
            if covered & set(arcs):
                raise DigraphError(f"representative {a} overlaps an earlier block")
            covered |= set(arcs)
            blocks.append(Block((u, v), a, bracket, inv, arcs))
        reps_out[(u, v)] = reps
        pair_arcs = set(dg.arcs_between(u, v)) | set(dg.arcs_between(v, u))
        block_arcs = {x for b in blocks if b.pair == (u, v) for x in b.arcs}
        if block_arcs != pair_arcs:
            raise DigraphError(f"blocks of {(u, v)} do not cover arc(u, v)")
    order = tuple(a for b in blocks for a in b.arcs)
    return ArcPartition(tuple(phi), reps_out, tuple(blocks), order)
