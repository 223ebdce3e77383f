# %% [markdown]
# # Subsets of {1..n}
#
# The Hasse graph of the subset lattice gives the algebras Q_n. Their Hilbert
# series has the closed form (1 - t) / (1 - t (2 - t)^n). Here we compute it
# three ways and compare.

# %%
from layered_hilbert import (
    closed_qn,
    count_words,
    denominator_chains,
    denominator_mobius,
    gen_boolean,
    hilbert_series,
)

# %% [markdown]
# The graph for n = 3 has 8 vertices on 4 levels and 12 edges.

# %%
g = gen_boolean(3)
print(len(g.vertices), "vertices,", len(g.edges), "edges, level sizes", g.level_sizes())

# %% [markdown]
# The denominator D(t) from Moebius inversion and from explicit chain
# enumeration, next to the closed form.

# %%
print("mobius :", denominator_mobius(g))
print("chains :", denominator_chains(g))
print("closed :", closed_qn(3).den)

# %% [markdown]
# Expanding (1 - t) / D(t), and counting normal words directly:

# %%
print(hilbert_series(g, 8).series)
print(count_words(g, 8).counts)

# %%
for n in range(1, 7):
    print(n, hilbert_series(gen_boolean(n), 6).series.tolist())
