# %% [markdown]
# # Exact algebra building blocks
#
# Scalars are Gaussian rationals, polynomials have Gaussian-rational
# coefficients, and rational functions are kept in lowest terms with a monic
# denominator.  Equality is therefore structural: two values are equal iff
# their canonical forms match.

# %%
from ihara_zeta.algebra import Matrix, Polynomial, RationalFunction, T, TruncatedSeries, parse_scalar

x = parse_scalar("3/4-1/2i")
print(x, "*", x.conjugate(), "=", x * x.conjugate())
print("inverse:", x.inverse())

# %% [markdown]
# Rational functions cancel common factors on construction.

# %%
r = RationalFunction(Polynomial([1, 0, -1]), Polynomial([1, -1]))  # (1 - t^2) / (1 - t)
print(r, "| polynomial?", r.is_polynomial())

# %% [markdown]
# Determinants over Q(i)[t] go through fraction-free elimination, so
# `det(I - tM)` comes out as a polynomial without ever leaving the ring.

# %%
M = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
I_tM = Matrix.identity(3, Polynomial) - M.scale(T)
print("det(I - tM) =", I_tM.det())

# %% [markdown]
# Truncated series: the reciprocal of `1 - t^3` to order 9, then `exp(log)`
# as a round trip.

# %%
s = TruncatedSeries.from_polynomial(Polynomial([1, 0, 0, -1]), 9)
print([str(c) for c in s.reciprocal().coeffs])
print(s.log().exp() == s)
