import random
from itertools import combinations, product

import pytest
from hypothesis import strategies as st

from layered_hilbert import gen_boolean, gen_complete, gen_subspace, validate


def random_layered(rng: random.Random, max_vertices=20, max_level=4, parallel=0.0):
    """Random valid layered graph: unique * at level 0, every positive vertex has an out-edge."""
    top = rng.randint(0, max_level)
    budget = max_vertices - 1
    sizes = [1]
    for _ in range(top):
        remaining_levels = top - len(sizes) + 1
        hi = max(1, min(5, budget - (remaining_levels - 1)))
        k = rng.randint(1, hi)
        sizes.append(k)
        budget -= k
    by_level = [[f"v{lvl}_{i}" for i in range(k)] for lvl, k in enumerate(sizes)]
    by_level[0] = ["*"]
    vertices = [{"id": v, "level": lvl} for lvl, vs in enumerate(by_level) for v in vs]
    edges = []
    for lvl in range(1, len(sizes)):
        below = by_level[lvl - 1]
        for v in by_level[lvl]:
            heads = rng.sample(below, rng.randint(1, len(below)))
            for w in heads:
                edges.append({"tail": v, "head": w})
                if rng.random() < parallel:
                    edges.append({"tail": v, "head": w})
    rng.shuffle(vertices)
    return validate({"vertices": vertices, "edges": edges})


@st.composite
def layered_graphs(draw, max_vertices=12, max_level=4):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_layered(random.Random(seed), max_vertices, max_level, parallel=0.2)


def naive_closure(g):
    """Transitive closure by repeated relaxation over the edge list."""
    rel = {(e.tail, e.head) for e in g.edges}
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


def brute_chains(g):
    """All nonempty chains as vertex subsets that are totally ordered, sorted by level."""
    closure = naive_closure(g)
    ids = g.ids
    out = []
    for r in range(1, g.n + 2):
        for subset in combinations(ids, r):
            ordered = sorted(subset, key=lambda v: -g.levels[v])
            if len({g.levels[v] for v in subset}) != r:
                continue
            if all((ordered[i], ordered[i + 1]) in closure for i in range(r - 1)):
                out.append(ordered)
    return out


def brute_denominator(g):
    coeffs = [0] * (g.n + 2)
    coeffs[0] = 1
    for ch in brute_chains(g):
        coeffs[g.levels[ch[0]] - g.levels[ch[-1]] + 1] += (-1) ** len(ch)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def brute_subspaces(n, q):
    """Every subspace of F_q^n as a frozenset of vectors, found by spanning all small tuples."""
    vecs = list(product(range(q), repeat=n))
    found = set()
    for k in range(n + 1):
        for gens in product(vecs, repeat=k):
            span = set()
            for coeffs in product(range(q), repeat=k):
                span.add(tuple(sum(c * g[i] for c, g in zip(coeffs, gens)) % q for i in range(n)))
            if not span:
                span = {tuple([0] * n)}
            found.add(frozenset(span))
    return found


def subspace_dim(space, q):
    size, d = len(space), 0
    while q**d < size:
        d += 1
    return d


@pytest.fixture(scope="session")
def family_graphs():
    graphs = {f"boolean{n}": gen_boolean(n) for n in range(0, 5)}
    graphs.update({f"subspace{n},{q}": gen_subspace(n, q) for n, q in [(1, 2), (2, 2), (3, 2), (2, 3)]})
    graphs.update(
        {f"complete{m}": gen_complete(m) for m in ([1], [2, 1], [2, 2, 1], [3, 2, 1], [2, 3, 2, 1], [1, 1, 1, 1])}
    )
    return graphs


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.REPORT:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.REPORT:
            terminalreporter.write_line(line)
