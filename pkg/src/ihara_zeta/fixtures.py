"""Small named digraphs used throughout the tests and demos.

``looped_triangle`` is the ten-arc digraph on v1, v2, v3 with arcs (ids in brackets)

    a11 [0], a12 [1]  loops at v1
    a21 [2], a22 [3]  v1 -> v2
    a23 [4], a24 [5]  v2 -> v1
    a31 [6]           v2 -> v3
    a32 [7]           v3 -> v2
    a41 [8]           v1 -> v3
    a42 [9]           v3 -> v1

Read as the symmetric digraph of a graph, the loop pair is one doubled
loop edge and the parallel edges pair as {a21, a23} and {a22, a24}.
"""

from __future__ import annotations

from .digraph import Digraph, symmetric_digraph

__all__ = [
    "LOOPED_TRIANGLE_LABELS",
    "LOOPED_TRIANGLE_INVOLUTION",
    "looped_triangle",
    "looped_triangle_graph_edges",
    "one_arc",
    "single_loop",
    "path_p2",
    "cycle_c3",
    "complete_k4",
    "C3_EDGES",
    "K4_EDGES",
    "all_fixtures",
]

LOOPED_TRIANGLE_LABELS = ("a11", "a12", "a21", "a22", "a23", "a24", "a31", "a32", "a41", "a42")
_LOOPED_TRIANGLE_ARCS = ((0, 0), (0, 0), (0, 1), (0, 1), (1, 0), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0))
LOOPED_TRIANGLE_INVOLUTION = (1, 0, 4, 5, 2, 3, 7, 6, 9, 8)

C3_EDGES = ((0, 1), (1, 2), (2, 0))
K4_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def looped_triangle(mode: str = "general") -> Digraph:
    inv = LOOPED_TRIANGLE_INVOLUTION if mode == "symmetric" else None
    return Digraph.from_pairs(3, _LOOPED_TRIANGLE_ARCS, inv)


def looped_triangle_graph_edges():
    """Edges e1..e5 of the underlying graph, in the order that reproduces
    these arcs through :func:`symmetric_digraph` (up to arc ids)."""
    return ((0, 0), (0, 1), (0, 1), (1, 2), (0, 2))


def one_arc() -> Digraph:
    return Digraph.from_pairs(2, [(0, 1)])


def single_loop() -> Digraph:
    return Digraph.from_pairs(1, [(0, 0)])


def path_p2() -> Digraph:
    return symmetric_digraph([(0, 1)], 2)


def cycle_c3() -> Digraph:
    return symmetric_digraph(C3_EDGES, 3)


def complete_k4() -> Digraph:
    return symmetric_digraph(K4_EDGES, 4)


def all_fixtures() -> dict[str, Digraph]:
    return {
        "one-arc": one_arc(),
        "single-loop": single_loop(),
        "P2": path_p2(),
        "C3": cycle_c3(),
        "K4": complete_k4(),
        "looped-triangle-general": looped_triangle("general"),
        "looped-triangle-symmetric": looped_triangle("symmetric"),
    }
