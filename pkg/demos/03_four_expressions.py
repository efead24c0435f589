# %% [markdown]
# # One zeta function, four expressions
#
# Seeded random weights on the looped triangle.  The Hashimoto value is
# `det(I - t M_theta)`.  The Ihara value rebuilds the same polynomial from
# vertex-sized matrices and the block factor det T.  The exponential and
# Euler series are compared with `1 / det(I - t M_theta)` through `t^8`.

# %%
import random

from ihara_zeta import WeightAssignment, verify_theorem
from ihara_zeta.fixtures import looped_triangle

dg = looped_triangle("general")
w = WeightAssignment.random(dg.arc_count, random.Random(1))
rep = verify_theorem(dg, w, order=8)

print("det(I - tM) =", rep.hashimoto)
print("det T       =", rep.detT)
print("Ihara       =", rep.ihara)
print("agree:", rep.ihara_equal, rep.series_equal)

# %% [markdown]
# The first few series coefficients, side by side.

# %%
for k in range(6):
    print(k, rep.exponential[k], rep.euler[k])

# %% [markdown]
# Perturb one weight on the Ihara side only and the identity breaks at a
# definite power of t.

# %%
bad = w.replace(tau1=(w.tau1[0] + 1,) + w.tau1[1:])
broken = verify_theorem(dg, w, order=8, ihara_weights=bad)
print("passed:", broken.passed, "first divergence:", broken.first_divergence)
