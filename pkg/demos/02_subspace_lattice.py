# %% [markdown]
# # Subspaces of F_q^n
#
# Vertices are subspaces, identified by reduced echelon bases; edges are
# codimension-one inclusions. Level sizes are Gaussian binomials.

# %%
from layered_hilbert import (
    closed_dual_lnq,
    closed_lnq,
    dual_series,
    gen_subspace,
    hilbert_series,
    mobius_table,
    q_binomial,
)

g = gen_subspace(3, 2)
print(g.level_sizes(), [q_binomial(3, m, 2) for m in range(4)])

# %% [markdown]
# The Moebius function of an interval of height d is (-1)^d q^(d(d-1)/2).

# %%
mu = mobius_table(g)
top, bottom = g.order()[0], g.star
print(top, "->", bottom, "mu =", mu[top, bottom], "expected", (-1) ** 3 * 2 ** 3)

# %% [markdown]
# Series from the graph and from the closed form:

# %%
print(hilbert_series(g, 6).series)
print(closed_lnq(3, 2).series(6))

# %% [markdown]
# The algebra is Koszul, so the dual series is D(-t) / (1 + t), a polynomial.

# %%
for n, q in [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)]:
    d = dual_series(gen_subspace(n, q))
    print(f"L({n},{q})", d.polynomial, "| closed form:", closed_dual_lnq(n, q))
