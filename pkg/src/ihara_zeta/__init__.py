"""Weighted zeta functions of finite digraphs in exact arithmetic.

Four expressions of the same zeta function are computed independently:
exponential (generating series of circular products), Euler (product over
prime cycles), Hashimoto (det(I - t M_theta)) and Ihara (a vertex-indexed
determinant times det T).
"""

from .algebra import Matrix, Polynomial, RationalFunction, Scalar, T, TruncatedSeries
from .digraph import (
    Arc,
    ArcPartition,
    Digraph,
    DigraphError,
    arc_partition,
    bracket_set,
    inverse_set,
    representative_choices,
    symmetric_digraph,
)
from .ihara import (
    IharaConsistencyError,
    TheoremReport,
    bass_inverse_zeta,
    ihara_data,
    ihara_inverse_zeta,
    upsilon_sum,
    verify_theorem,
)
from .zeta import (
    WeightAssignment,
    adjacency_condition_check,
    enumerate_closed_paths,
    enumerate_prime_cycles,
    euler_expression,
    exponential_expression,
    hashimoto_inverse_zeta,
    hashimoto_matrix,
    n_k,
    theta,
)

__version__ = "0.1.0"
