# %% [markdown]
# # A hand-written graph
#
# Any layered graph with a single level-0 vertex works. Graph files are JSON
# with "vertices" and "edges" lists; the same text can be parsed in memory.

# %%
from layered_hilbert import (
    count_words,
    count_words_from,
    enumerate_words,
    hilbert_series,
    parse_graph,
    serialize_graph,
    vertex_series,
)
from layered_hilbert.oracle import format_word

text = """
{
  "name": "kite",
  "vertices": [
    {"id": "*", "level": 0},
    {"id": "a", "level": 1}, {"id": "b", "level": 1},
    {"id": "top", "level": 2}
  ],
  "edges": [
    {"tail": "a", "head": "*"}, {"tail": "b", "head": "*"},
    {"tail": "top", "head": "a"}
  ]
}
"""
g = parse_graph(text)
print(serialize_graph(g))

# %% [markdown]
# Series, split by the vertex carrying the first letter of each basis word:

# %%
T = 6
print(hilbert_series(g, T).series)
for v, s in vertex_series(g, T).items():
    print(f"{v:>4}", s.tolist())
print("oracle, from 'top':", count_words_from(g, "top", T))

# %% [markdown]
# Basis words of degree 2. The pair (top,1)(a,1) is missing because
# (top,1) covers (a,1).

# %%
for w in enumerate_words(g, 2):
    print(format_word(w))
print(len(enumerate_words(g, 2)), "=", count_words(g, 2).counts[2])
