# %% [markdown]
# # Closed-form block inverses
#
# A block of `J` is either rank one (`M[i][j] = m1[i] m2[j]`) or splits into
# two off-diagonal pieces.  In both cases `(I + tM)^-1` needs only `M` and
# `M^2`, and the determinant is a polynomial of degree at most two.

# %%
import random
from fractions import Fraction

from ihara_zeta.algebra import Matrix, RationalFunction, T, antidiag_inverse, antidiag_matrix, rank_one_inverse

rng = random.Random(3)


def draw(n):
    return [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(n)]


m1, m2 = draw(3), draw(3)
inv, det = rank_one_inverse(m1, m2)
print("rank one: det(I + tM) =", det)

# %%
m1, m2 = draw(5), draw(5)
M = antidiag_matrix(m1, m2, 2)
inv, det = antidiag_inverse(m1, m2, 2)
P = Matrix.identity(5, RationalFunction) + M.scale(RationalFunction(T))
print("anti-diagonal: det(I + tM) =", det)
print("inverse checks out:", inv @ P == Matrix.identity(5, RationalFunction))
print("det checks out:", P.det() == det)
