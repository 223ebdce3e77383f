import random

import pytest
from hypothesis import given, settings

from layered_hilbert import hilbert
from layered_hilbert.graph import (
    BottomLevelNotSingleton,
    GraphError,
    GraphSyntaxError,
    NotPrime,
    gen_boolean,
    gen_complete,
    gen_subspace,
    geq,
    parse_graph,
    reachable,
    rref,
    serialize_graph,
    validate,
)

from .conftest import brute_subspaces, layered_graphs, naive_closure, random_layered, subspace_dim


def raw(vertices, edges):
    return {
        "vertices": [{"id": v, "level": l} for v, l in vertices],
        "edges": [{"tail": a, "head": b} for a, b in edges],
    }


@pytest.mark.parametrize(
    "desc, kind",
    [
        (raw([("a", 0), ("b", 0)], []), "MultipleLevelZero"),
        (raw([("a", 1)], []), "NoLevelZero"),
        (raw([("*", 0), ("a", 1), ("b", 2)], [("a", "*"), ("b", "*")]), "NonLayeredEdge"),
        (raw([("*", 0), ("a", 1)], []), "DanglingVertex"),
        (raw([("*", 0), ("a", 1), ("a", 1)], [("a", "*")]), "DuplicateId"),
        (raw([("*", 0), ("a", 1)], [("a", "zz")]), "UnknownEndpoint"),
    ],
)
def test_validate_errors(desc, kind):
    with pytest.raises(GraphError) as exc:
        validate(desc)
    assert exc.value.kind == kind


def test_reachable_examples():
    g = gen_boolean(2)
    assert geq(g, "{1}", "{1}")
    assert reachable(g, "{1,2}", "{}")
    assert not reachable(g, "{1}", "{2}")
    assert not reachable(g, "{1}", "{1}")
    with pytest.raises(GraphError) as exc:
        reachable(g, "{1}", "nope")
    assert exc.value.kind == "UnknownEndpoint"


@pytest.mark.parametrize("n, nv, ne", [(0, 1, 0), (1, 2, 1), (2, 4, 4), (3, 8, 12), (5, 32, 80)])
def test_gen_boolean_counts(n, nv, ne):
    g = gen_boolean(n)
    # 2^n subsets, n 2^(n-1) covering pairs
    assert (len(g.vertices), len(g.edges)) == (nv, ne) == (2**n, n * 2 ** (n - 1) if n else 0)
    assert g.star == "{}"


@pytest.mark.parametrize("n, q", [(1, 2), (1, 5), (2, 2), (3, 2), (2, 3)])
def test_gen_subspace_matches_brute_force(n, q):
    g = gen_subspace(n, q)
    spaces = brute_subspaces(n, q)
    assert len(g.vertices) == len(spaces)
    by_dim = [0] * (n + 1)
    for s in spaces:
        by_dim[subspace_dim(s, q)] += 1
    assert g.level_sizes() == by_dim
    # codimension-one inclusions counted directly
    cover_pairs = sum(
        1 for a in spaces for b in spaces if b < a and subspace_dim(a, q) == subspace_dim(b, q) + 1
    )
    assert len(g.edges) == cover_pairs
    assert len(set(g.edges)) == len(g.edges)


def test_gen_subspace_sizes():
    assert (len(gen_subspace(2, 2).vertices), len(gen_subspace(2, 2).edges)) == (5, 6)
    g = gen_subspace(3, 2)
    assert g.level_sizes() == [1, 7, 7, 1]
    assert len(g.edges) == 35
    with pytest.raises(NotPrime):
        gen_subspace(2, 4)


@pytest.mark.parametrize("n, q", [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)])
def test_subspace_levels_are_q_binomials(n, q):
    g = gen_subspace(n, q)
    assert g.level_sizes() == [hilbert.q_binomial(n, m, q) for m in range(n + 1)]


def test_subspace_order_is_inclusion():
    q = 3
    g = gen_subspace(2, q)

    def span(vid):
        rows = [tuple(int(x) for x in r.split(",")) for r in vid.strip("()").split(")(") if r]
        out = {(0, 0)}
        for a in range(q):
            for b in range(q):
                if len(rows) == 2:
                    out.add(tuple((a * x + b * y) % q for x, y in zip(*rows)))
                elif len(rows) == 1:
                    out.add(tuple(a * x % q for x in rows[0]))
        return out

    for v in g.ids:
        for w in g.ids:
            assert reachable(g, v, w) == (span(w) < span(v))


def test_rref_canonical():
    assert rref([[2, 4], [1, 2]], 5) == ((1, 2),)
    assert rref([[0, 1], [1, 1]], 2) == ((1, 0), (0, 1))
    assert rref([], 2) == ()


@pytest.mark.parametrize("m, nv, ne", [([2, 2, 1], 5, 6), ([1, 1, 1], 3, 2), ([3, 1], 4, 3)])
def test_gen_complete(m, nv, ne):
    g = gen_complete(m)
    assert (len(g.vertices), len(g.edges)) == (nv, ne)
    assert g.level_sizes() == m[::-1]


def test_gen_complete_bottom():
    with pytest.raises(BottomLevelNotSingleton):
        gen_complete([2, 2])


def test_roundtrip():
    g = gen_boolean(1)
    assert parse_graph(serialize_graph(g)) == g
    for g in (gen_subspace(2, 3), gen_complete([2, 3, 1])):
        h = parse_graph(serialize_graph(g))
        assert h == g and h.name == g.name


def test_parse_errors():
    good = '{"vertices": [{"id": "*", "level": 0}, {"id": "a", "level": 1}], "edges": [%s]}'
    with pytest.raises(GraphError, match="UnknownEndpoint"):
        parse_graph(good % '{"tail": "a", "head": "b"}')
    dup = '{"vertices": [{"id": "*", "level": 0}, {"id": "*", "level": 0}], "edges": []}'
    with pytest.raises(GraphError) as exc:
        parse_graph(dup)
    assert exc.value.kind == "DuplicateId"
    with pytest.raises(GraphSyntaxError):
        parse_graph("{not json")
    with pytest.raises(GraphSyntaxError):
        parse_graph('{"vertices": [], "edges": [], "extra": 1}')
    with pytest.raises(GraphSyntaxError):
        parse_graph('{"vertices": [{"id": "*", "level": 0, "color": 1}], "edges": []}')
    with pytest.raises(GraphSyntaxError):
        parse_graph('{"vertices": [{"id": "*", "level": -1}], "edges": []}')


def test_parse_utf8_bytes():
    text = '{"name": "Γ", "vertices": [{"id": "∗", "level": 0}], "edges": []}'
    g = parse_graph(text.encode("utf-8"))
    assert g.star == "∗" and g.name == "Γ"


def test_generated_families_have_out_edges(family_graphs):
    for g in family_graphs.values():
        tails = {e.tail for e in g.edges}
        assert all(v.id in tails for v in g.vertices if v.level > 0)


def test_order_rule():
    g = gen_complete([2, 2, 1])
    assert g.order() == ["L2.0", "L2.1", "L1.0", "L1.1", "L0.0"]


@settings(max_examples=60, deadline=None)
@given(layered_graphs(max_vertices=16))
def test_reachability_matches_naive_closure(g):
    closure = naive_closure(g)
    for v in g.ids:
        for w in g.ids:
            assert reachable(g, v, w) == ((v, w) in closure)
            if reachable(g, v, w):
                assert g.levels[v] > g.levels[w]


def test_reachability_transitive():
    rng = random.Random(7)
    for _ in range(20):
        g = random_layered(rng)
        for u in g.ids:
            for v in g.downsets[u]:
                assert g.downsets[v] <= g.downsets[u]


def test_parallel_edges_do_not_change_reachability():
    base = raw([("*", 0), ("a", 1), ("b", 2)], [("a", "*"), ("b", "a")])
    doubled = raw([("*", 0), ("a", 1), ("b", 2)], [("a", "*"), ("b", "a"), ("b", "a")])
    g, h = validate(base), validate(doubled)
    assert len(h.edges) == 3
    assert dict(g.downsets) == dict(h.downsets)
    assert hilbert.denominator_mobius(g) == hilbert.denominator_mobius(h)
