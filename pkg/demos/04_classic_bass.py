# %% [markdown]
# # All weights equal to one
#
# With every weight set to 1 on the symmetric digraph of a graph, det T is
# `(1 - t^2)^|E|`.  `D (1 - t^2)` is the degree matrix and `X (1 - t^2)` is the
# adjacency matrix.  The Ihara polynomial then matches the classical
# `(1 - t^2)^(|E| - |V|) det(I - tA + t^2 (D - I))`.

# %%
from ihara_zeta import WeightAssignment, bass_inverse_zeta, ihara_data, ihara_inverse_zeta, symmetric_digraph
from ihara_zeta.algebra import Polynomial, RationalFunction
from ihara_zeta.fixtures import K4_EDGES

dg = symmetric_digraph(K4_EDGES, 4)
w = WeightAssignment.ones(dg.arc_count)
data = ihara_data(dg, w)
f = RationalFunction(Polynomial([1, 0, -1]))

print("det T =", data.detT)
print("D (1-t^2):", [[str(x * f) for x in row] for row in data.D.entries])
print("X (1-t^2):", [[str(x * f) for x in row] for row in data.X.entries])

# %%
ih = ihara_inverse_zeta(dg, w)
print(ih)
print("matches classical form:", ih == bass_inverse_zeta(K4_EDGES, 4))
