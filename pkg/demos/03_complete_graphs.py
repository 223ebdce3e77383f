# %% [markdown]
# # Complete layered graphs C[m_n, ..., m_1, 1]
#
# Every vertex is joined to every vertex one level down. The denominator has a
# closed form in the level sizes alone.

# %%
from layered_hilbert import (
    closed_complete,
    closed_dual_complete,
    denominator_chains,
    dual_series,
    gen_complete,
    hilbert_series,
)

for m in ([2, 1], [2, 2, 1], [3, 2, 1], [2, 3, 2, 1]):
    g = gen_complete(m)
    print(m, closed_complete(m).den, "|", denominator_chains(g))

# %% [markdown]
# With every level of size one, the algebra is free on n generators and the
# series is 1 / (1 - n t).

# %%
for n in range(1, 6):
    print(n, hilbert_series(gen_complete([1] * (n + 1)), 6).series.tolist())

# %% [markdown]
# Dual series, from the graph and from the closed form:

# %%
for m in ([2, 1], [2, 2, 1], [3, 2, 1], [2, 3, 2, 1]):
    print(m, dual_series(gen_complete(m)).polynomial, "|", closed_dual_complete(m))
