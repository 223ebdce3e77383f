"""Layered directed graphs with a unique level-0 vertex.

A layered graph has vertices carrying integer levels and edges that drop
exactly one level. Reachability (``v > w``) is the partial order that every
series computation depends on; it is computed once at validation time and
cached as a frozenset per vertex.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Iterable, Mapping, Sequence


class GraphError(ValueError):
    """A layered-graph invariant is violated.

    ``kind`` is one of :data:`GRAPH_ERROR_KINDS`; ``detail`` names the offending ids.
    """

    def __init__(self, kind: str, detail: Any = None):
        if kind not in GRAPH_ERROR_KINDS:
            raise ValueError(f"unknown GraphError kind {kind!r}")
        self.kind = kind
        self.detail = detail
        super().__init__(f"{kind}: {detail}" if detail is not None else kind)


GRAPH_ERROR_KINDS = (
    "NoLevelZero",
    "MultipleLevelZero",
    "NonLayeredEdge",
    "DanglingVertex",
    "DuplicateId",
    "UnknownEndpoint",
)


class GraphSyntaxError(ValueError):
    """The graph description is malformed (bad JSON, wrong types, unknown fields)."""


class NotPrime(ValueError):
    pass


class BottomLevelNotSingleton(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    id: str
    level: int


@dataclass(frozen=True)
class Edge:
    tail: str
    head: str


@dataclass(frozen=True, eq=False)
class LayeredGraph:
    """Validated layered graph. Build through :func:`validate` or a generator."""

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    name: str | None = None
    levels: Mapping[str, int] = field(repr=False, default_factory=dict)
    downsets: Mapping[str, frozenset[str]] = field(repr=False, default_factory=dict)

    @property
    def n(self) -> int:
        """Top level."""
        return max(v.level for v in self.vertices)

    @property
    def star(self) -> str:
        return next(v.id for v in self.vertices if v.level == 0)

    @property
    def ids(self) -> list[str]:
        return [v.id for v in self.vertices]

    def level(self, v: str) -> int:
        try:
            return self.levels[v]
        except KeyError:
            raise GraphError("UnknownEndpoint", v) from None

    def positive(self) -> list[str]:
        """Vertices of positive level, in matrix order."""
        return [v for v in self.order() if self.levels[v] > 0]

    def order(self) -> list[str]:
        """Level descending, ties by id; this fixes matrix row/column indexing."""
        return [v.id for v in sorted(self.vertices, key=lambda v: (-v.level, v.id))]

    def reachable(self, v: str, w: str) -> bool:
        return reachable(self, v, w)

    def geq(self, v: str, w: str) -> bool:
        return geq(self, v, w)

    def level_sizes(self) -> list[int]:
        """Number of vertices per level, index = level."""
        counts = Counter(v.level for v in self.vertices)
        return [counts.get(i, 0) for i in range(self.n + 1)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LayeredGraph):
            return NotImplemented
        return (
            sorted(self.vertices, key=lambda v: v.id) == sorted(other.vertices, key=lambda v: v.id)
            and Counter(self.edges) == Counter(other.edges)
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), frozenset(Counter(self.edges).items())))

    def __len__(self) -> int:
        return len(self.vertices)


def validate(raw: Mapping[str, Any] | LayeredGraph) -> LayeredGraph:
    """Check a raw description and return a LayeredGraph with reachability cached.

    ``raw`` holds ``vertices`` (dicts with ``id``/``level``, or Vertex) and
    ``edges`` (dicts with ``tail``/``head``, or Edge, or 2-tuples). Raises the
    first GraphError found.
    """
    if isinstance(raw, LayeredGraph):
        raw = {"name": raw.name, "vertices": raw.vertices, "edges": raw.edges}
    vertices = [_coerce_vertex(v) for v in raw.get("vertices", ())]
    edges = [_coerce_edge(e) for e in raw.get("edges", ())]

    levels: dict[str, int] = {}
    for v in vertices:
        if v.id in levels:
            raise GraphError("DuplicateId", v.id)
        levels[v.id] = v.level

    for e in edges:
        for end in (e.tail, e.head):
            if end not in levels:
                raise GraphError("UnknownEndpoint", end)
        if levels[e.tail] != levels[e.head] + 1:
            raise GraphError("NonLayeredEdge", (e.tail, e.head))

    bottom = sorted(v.id for v in vertices if v.level == 0)
    if not bottom:
        raise GraphError("NoLevelZero")
    if len(bottom) > 1:
        raise GraphError("MultipleLevelZero", bottom)

    out: dict[str, set[str]] = {v.id: set() for v in vertices}
    for e in edges:
        out[e.tail].add(e.head)
    for v in sorted(vertices, key=lambda v: (v.level, v.id)):
        if v.level > 0 and not out[v.id]:
            raise GraphError("DanglingVertex", v.id)

    # heads sit one level lower, so ascending order sees them first
    downsets: dict[str, frozenset[str]] = {}
    for v in sorted(vertices, key=lambda v: v.level):
        below: set[str] = set()
        for w in out[v.id]:
            below.add(w)
            below |= downsets[w]
        downsets[v.id] = frozenset(below)

    return LayeredGraph(
        vertices=tuple(vertices),
        edges=tuple(edges),
        name=raw.get("name"),
        levels=levels,
        downsets=downsets,
    )


def _coerce_vertex(v: Any) -> Vertex:
    if isinstance(v, Vertex):
        vid, level = v.id, v.level
    elif isinstance(v, Mapping):
        extra = set(v) - {"id", "level"}
        if extra:
            raise GraphSyntaxError(f"unknown vertex fields {sorted(extra)}")
        try:
            vid, level = v["id"], v["level"]
        except KeyError as exc:
            raise GraphSyntaxError(f"vertex missing field {exc}") from None
    else:
        raise GraphSyntaxError(f"cannot read vertex from {v!r}")
    if not isinstance(vid, str):
        raise GraphSyntaxError(f"vertex id must be a string, got {vid!r}")
    if isinstance(level, bool) or not isinstance(level, int) or level < 0:
        raise GraphSyntaxError(f"vertex {vid!r}: level must be a nonnegative integer")
    return Vertex(vid, level)


def _coerce_edge(e: Any) -> Edge:
    if isinstance(e, Edge):
        tail, head = e.tail, e.head
    elif isinstance(e, Mapping):
        extra = set(e) - {"tail", "head"}
        if extra:
            raise GraphSyntaxError(f"unknown edge fields {sorted(extra)}")
        try:
            tail, head = e["tail"], e["head"]
        except KeyError as exc:
            raise GraphSyntaxError(f"edge missing field {exc}") from None
    elif isinstance(e, Sequence) and not isinstance(e, str) and len(e) == 2:
        tail, head = e
    else:
        raise GraphSyntaxError(f"cannot read edge from {e!r}")
    if not isinstance(tail, str) or not isinstance(head, str):
        raise GraphSyntaxError(f"edge endpoints must be strings, got {e!r}")
    return Edge(tail, head)


def reachable(g: LayeredGraph, v: str, w: str) -> bool:
    """True iff a directed path of one or more edges leads from v to w."""
    g.level(v)
    g.level(w)
    return w in g.downsets[v]


def geq(g: LayeredGraph, v: str, w: str) -> bool:
    return v == w or reachable(g, v, w)


# -- generators ---------------------------------------------------------------


def _set_id(s: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def gen_boolean(n: int) -> LayeredGraph:
    """Hasse graph of the subsets of {1..n}, edges from a set to each set one element smaller."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    ground = range(1, n + 1)
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(ground, k)]
    vertices = [Vertex(_set_id(s), len(s)) for s in subsets]
    edges = [Edge(_set_id(s), _set_id(s - {x})) for s in subsets for x in sorted(s)]
    return validate({"name": f"boolean({n})", "vertices": vertices, "edges": edges})


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def rref(rows: Sequence[Sequence[int]], q: int) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form over F_q with zero rows dropped."""
    m = [[x % q for x in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, q)
        m[r] = [x * inv % q for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % q for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r])


def _rref_matrices(k: int, n: int, q: int):
    """Every k x n reduced echelon matrix of rank k over F_q, i.e. every k-dim subspace once."""
    for pivots in combinations(range(n), k):
        free = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
        for values in product(range(q), repeat=len(free)):
            m = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                m[i][p] = 1
            for (i, c), x in zip(free, values):
                m[i][c] = x
            yield tuple(tuple(r) for r in m)


def _subspace_id(basis: tuple[tuple[int, ...], ...]) -> str:
    return "".join("(" + ",".join(map(str, r)) + ")" for r in basis) or "()"


def gen_subspace(n: int, q: int) -> LayeredGraph:
    """Hasse graph of the subspace lattice of F_q^n, q prime.

    Vertices are identified by their reduced echelon basis; edges join each
    subspace to its codimension-one subspaces.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not is_prime(q):
        raise NotPrime(f"q={q} is not prime")
    vertices: list[Vertex] = []
    edges: list[Edge] = []
    for k in range(n + 1):
        hyper = list(_rref_matrices(k - 1, k, q)) if k else []
        for basis in _rref_matrices(k, n, q):
            vid = _subspace_id(basis)
            vertices.append(Vertex(vid, k))
            # hyperplanes of U are images of hyperplanes of F_q^k under the basis map
            for coords in hyper:
                sub = [[sum(a * b for a, b in zip(c, col)) % q for col in zip(*basis)] for c in coords]
                edges.append(Edge(vid, _subspace_id(rref(sub, q))))
    return validate({"name": f"subspace({n},{q})", "vertices": vertices, "edges": edges})


def gen_complete(m: Sequence[int]) -> LayeredGraph:
    """Complete layered graph with level sizes ``m = [m_n, ..., m_1, m_0]``, m_0 == 1."""
    sizes = list(m)
    if not sizes or any(int(x) < 1 for x in sizes):
        raise ValueError(f"level sizes must be positive, got {sizes}")
    if sizes[-1] != 1:
        raise BottomLevelNotSingleton(f"m_0 = {sizes[-1]}, need 1")
    top = len(sizes) - 1
    by_level = {top - i: [f"L{top - i}.{j}" for j in range(c)] for i, c in enumerate(sizes)}
    vertices = [Vertex(vid, lvl) for lvl in range(top, -1, -1) for vid in by_level[lvl]]
    edges = [
        Edge(a, b) for lvl in range(top, 0, -1) for a in by_level[lvl] for b in by_level[lvl - 1]
    ]
    label = ",".join(map(str, sizes))
    return validate({"name": f"complete[{label}]", "vertices": vertices, "edges": edges})


# -- file format --------------------------------------------------------------


def graph_to_dict(g: LayeredGraph) -> dict:
    d: dict[str, Any] = {}
    if g.name is not None:
        d["name"] = g.name
    d["vertices"] = [{"id": v.id, "level": v.level} for v in g.vertices]
    d["edges"] = [{"tail": e.tail, "head": e.head} for e in g.edges]
    return d


def serialize_graph(g: LayeredGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2, ensure_ascii=False) + "\n"


def parse_graph(text: str | bytes) -> LayeredGraph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise GraphSyntaxError("top level must be an object")
    extra = set(data) - {"name", "vertices", "edges"}
    if extra:
        raise GraphSyntaxError(f"unknown fields {sorted(extra)}")
    for key in ("vertices", "edges"):
        if not isinstance(data.get(key), list):
            raise GraphSyntaxError(f"{key!r} must be a list")
    if data.get("name") is not None and not isinstance(data["name"], str):
        raise GraphSyntaxError("'name' must be a string")
    return validate(data)


def load_graph(path) -> LayeredGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: LayeredGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g))
