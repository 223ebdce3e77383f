"""Hilbert series of A(Gamma) for a layered graph Gamma.

Two routes to the denominator D(t) with h(t) = (1 - t) / D(t):

* ``mobius``: D(t) = 1 - t * 1^T zeta(t)^{-1} 1, where zeta(t) has entry
  t^(|v|-|w|) for v >= w. Every chain from v to w carries the same power of
  t, so zeta(t)^{-1} has entry mu(v, w) t^(|v|-|w|) with mu the Moebius function.
* ``chains``: D(t) = 1 + sum over chains v_1 > ... > v_l of (-1)^l t^(|v_1|-|v_l|+1),
  enumerated one chain at a time.

Closed forms for the boolean lattice, subspace lattices and complete layered
graphs live here too, along with their Koszul duals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .graph import LayeredGraph
from .series import (
    IntPoly,
    IntSeries,
    NotDivisible,
    RationalFn,
    poly_div_exact,
    poly_substitute_neg,
    series_inverse,
)

DEFAULT_TRUNCATION = 12
DEFAULT_CHAIN_CAP = 10**7

ONE_MINUS_T = IntPoly([1, -1])
ONE_PLUS_T = IntPoly([1, 1])


class ChainBudgetExceeded(RuntimeError):
    """Chain enumeration would visit more chains than the configured cap."""


class OutOfRange(ValueError):
    pass


# -- zeta matrix and Moebius function -------------------------------------------


@dataclass(frozen=True)
class ZetaMatrix:
    order: tuple[str, ...]
    entries: tuple[tuple[IntPoly, ...], ...]

    def __getitem__(self, key: tuple[str, str]) -> IntPoly:
        v, w = key
        idx = {u: i for i, u in enumerate(self.order)}
        return self.entries[idx[v]][idx[w]]

    def __len__(self) -> int:
        return len(self.order)


def zeta_matrix(g: LayeredGraph) -> ZetaMatrix:
    order = g.order()
    rows = []
    for v in order:
        row = []
        for w in order:
            if g.geq(v, w):
                row.append(IntPoly.monomial(g.levels[v] - g.levels[w]))
            else:
                row.append(IntPoly())
        rows.append(tuple(row))
    return ZetaMatrix(tuple(order), tuple(rows))


def identity_matrix(n: int) -> list[list[IntPoly]]:
    return [[IntPoly.one() if i == j else IntPoly() for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[IntPoly]], b: Sequence[Sequence[IntPoly]]) -> list[list[IntPoly]]:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[IntPoly() for _ in range(p)] for _ in range(n)]
    for i in range(n):
        acc = [IntPoly() for _ in range(p)]
        for k in range(m):
            aik = a[i][k]
            if aik.is_zero:
                continue
            bk = b[k]
            for j in range(p):
                if not bk[j].is_zero:
                    acc[j] = acc[j] + aik * bk[j]
        out[i] = acc
    return out


def invert_zeta(z: ZetaMatrix) -> list[list[IntPoly]]:
    """zeta^{-1} = I - N + N^2 - ... with N = zeta - I strictly upper triangular.

    The sum stops as soon as a power of N vanishes, which happens by N^(n+1).
    """
    size = len(z)
    ident = identity_matrix(size)
    nil = [[z.entries[i][j] - ident[i][j] for j in range(size)] for i in range(size)]
    result = [row[:] for row in ident]
    power, sign = nil, -1
    while any(not x.is_zero for row in power for x in row):
        for i in range(size):
            for j in range(size):
                if not power[i][j].is_zero:
                    result[i][j] = result[i][j] + power[i][j] * sign
        power = matmul(power, nil)
        sign = -sign
    return result


def mobius_table(g: LayeredGraph) -> dict[tuple[str, str], int]:
    """mu(v, w) for every pair v >= w, via mu(v, w) = -sum_{v >= u > w} mu(u, w)."""
    up: dict[str, list[str]] = {w: [] for w in g.levels}
    for v, below in g.downsets.items():
        for w in below:
            up[w].append(v)
    mu: dict[tuple[str, str], int] = {}
    for w in g.levels:
        mu[w, w] = 1
        # ascending level so every u strictly between is finished before v
        for v in sorted(up[w], key=lambda u: (g.levels[u], u)):
            mu[v, w] = -(1 + sum(mu[u, w] for u in g.downsets[v] if w in g.downsets[u]))
    return mu


def mobius_inverse_matrix(g: LayeredGraph) -> list[list[IntPoly]]:
    """zeta(t)^{-1} assembled from the Moebius table as mu(v, w) t^(|v|-|w|)."""
    order = g.order()
    mu = mobius_table(g)
    return [
        [
            IntPoly.monomial(g.levels[v] - g.levels[w], mu[v, w]) if (v, w) in mu else IntPoly()
            for w in order
        ]
        for v in order
    ]


# -- denominators -------------------------------------------------------------


def denominator_mobius(g: LayeredGraph) -> IntPoly:
    """D(t) = 1 - t * sum_{v >= w} mu(v, w) t^(|v|-|w|)."""
    coeffs = [0] * (g.n + 2)
    coeffs[0] = 1
    for (v, w), m in mobius_table(g).items():
        coeffs[g.levels[v] - g.levels[w] + 1] -= m
    return IntPoly(coeffs)


def count_chains(g: LayeredGraph) -> int:
    """Number of nonempty chains, computed by a counting recursion (no enumeration)."""
    below = {}
    for v in sorted(g.levels, key=lambda u: g.levels[u]):
        below[v] = 1 + sum(below[w] for w in g.downsets[v])
    return sum(below.values())


def denominator_chains(g: LayeredGraph, cap: int = DEFAULT_CHAIN_CAP) -> IntPoly:
    """D(t) by listing every chain v_1 > ... > v_l and adding (-1)^l t^(|v_1|-|v_l|+1).

    Raises ChainBudgetExceeded before enumerating if there are more than ``cap`` chains.
    """
    total = count_chains(g)
    if total > cap:
        raise ChainBudgetExceeded(f"{total} chains exceed the cap of {cap}")
    coeffs = [0] * (g.n + 2)
    coeffs[0] = 1
    levels, down = g.levels, g.downsets
    for top in g.levels:
        top_level = levels[top]
        stack = [(top, 1)]
        while stack:
            last, length = stack.pop()
            coeffs[top_level - levels[last] + 1] += -1 if length & 1 else 1
            for nxt in down[last]:
                stack.append((nxt, length + 1))
    return IntPoly(coeffs)


# -- series -------------------------------------------------------------------


@dataclass(frozen=True)
class HilbertResult:
    denominator: IntPoly
    series: IntSeries
    method: str

    @property
    def truncation(self) -> int:
        return self.series.truncation

    def to_dict(self) -> dict:
        return {
            "denominator": self.denominator.tolist(),
            "series": self.series.tolist(),
            "truncation": self.truncation,
            "method": self.method,
        }

    @classmethod
    def from_dict(cls, data: dict) -> HilbertResult:
        return cls(IntPoly(data["denominator"]), IntSeries(data["series"], data["truncation"]), data["method"])


def expand(num: IntPoly, den: IntPoly, truncation: int) -> IntSeries:
    return num.to_series(truncation) * series_inverse(den.to_series(truncation))


def hilbert_series(
    g: LayeredGraph,
    truncation: int = DEFAULT_TRUNCATION,
    method: str = "mobius",
    chain_cap: int = DEFAULT_CHAIN_CAP,
) -> HilbertResult:
    if method == "mobius":
        den = denominator_mobius(g)
    elif method == "chains":
        den = denominator_chains(g, cap=chain_cap)
    else:
        raise ValueError(f"unknown method {method!r}")
    return HilbertResult(den, expand(ONE_MINUS_T, den, truncation), method)


def vertex_series(g: LayeredGraph, truncation: int = DEFAULT_TRUNCATION) -> dict[str, IntSeries]:
    """Per-vertex series h_v: graded count of basis words whose first letter sits on v.

    h_v = (t + ... + t^|v|) h - sum_{v > w > *} t^(|v|-|w|) h_w, solved by
    increasing level; h_* = 1.
    """
    T = truncation
    h = hilbert_series(g, T).series
    star = g.star
    table: dict[str, IntSeries] = {star: IntSeries.one(T)}
    for v in sorted(g.levels, key=lambda u: (g.levels[u], u)):
        lv = g.levels[v]
        if lv == 0:
            continue
        acc = h * IntPoly([0] + [1] * lv)
        for w in g.downsets[v]:
            if w != star:
                acc = acc - table[w] * IntPoly.monomial(lv - g.levels[w])
        table[v] = acc
    return table


@dataclass(frozen=True)
class DualResult:
    """Series 1/h(-t); ``polynomial`` is D(-t)/(1+t) when that division is exact, else None."""

    series: IntSeries
    polynomial: IntPoly | None
    denominator: IntPoly = field(repr=False, default_factory=IntPoly)

    @property
    def is_polynomial(self) -> bool:
        return self.polynomial is not None

    def to_dict(self) -> dict:
        return {
            "denominator": self.denominator.tolist(),
            "series": self.series.tolist(),
            "truncation": self.series.truncation,
            "method": "mobius",
            "dual_polynomial": None if self.polynomial is None else self.polynomial.tolist(),
        }


def dual_from_denominator(den: IntPoly, truncation: int = DEFAULT_TRUNCATION) -> DualResult:
    # h(t) h^!(-t) = 1 gives h^!(t) = D(-t) / (1 + t)
    flipped = poly_substitute_neg(den)
    series = expand(flipped, ONE_PLUS_T, truncation)
    try:
        poly = poly_div_exact(flipped, ONE_PLUS_T)
    except NotDivisible:
        poly = None
    return DualResult(series, poly, den)


def dual_series(g: LayeredGraph, truncation: int = DEFAULT_TRUNCATION) -> DualResult:
    return dual_from_denominator(denominator_mobius(g), truncation)


# -- q-binomials --------------------------------------------------------------


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int, q: int) -> int:
    """Gaussian binomial [n choose k]_q at an integer q >= 1."""
    if q < 1:
        raise OutOfRange(f"q={q} must be >= 1")
    if not 0 <= k <= n:
        raise OutOfRange(f"need 0 <= k <= n, got n={n}, k={k}")
    if q == 1:
        return comb(n, k)
    if k == 0 or k == n:
        return 1
    return q_binomial(n - 1, k - 1, q) + q**k * q_binomial(n - 1, k, q)


def qbinomial_theorem_check(m: int, q: int, x: int) -> bool:
    """prod_{i<m} (1 + x q^i) == sum_j [m choose j]_q q^(j(j-1)/2) x^j at one point."""
    lhs = 1
    for i in range(m):
        lhs *= 1 + x * q**i
    rhs = sum(q_binomial(m, j, q) * q ** (j * (j - 1) // 2) * x**j for j in range(m + 1))
    return lhs == rhs


# -- closed forms -------------------------------------------------------------


def closed_qn(n: int) -> RationalFn:
    """(1 - t) / (1 - t (2 - t)^n) for the boolean lattice on n elements."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    den = IntPoly.one() - IntPoly([0, 1]) * IntPoly([2, -1]) ** n
    return RationalFn(ONE_MINUS_T, den)


def _prod_linear(qs: Sequence[int], sign: int) -> IntPoly:
    out = IntPoly.one()
    for c in qs:
        out = out * IntPoly([1, sign * c])
    return out


def closed_lnq(n: int, q: int) -> RationalFn:
    """Subspace lattice of F_q^n: D = 1 - t sum_m [n,m]_q prod_{i<n-m} (1 - t q^i)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = IntPoly()
    for m in range(n + 1):
        acc = acc + _prod_linear([q**i for i in range(n - m)], -1) * q_binomial(n, m, q)
    return RationalFn(ONE_MINUS_T, IntPoly.one() - IntPoly([0, 1]) * acc)


def _check_complete(m: Sequence[int]) -> list[int]:
    sizes = [int(x) for x in m]
    if not sizes or sizes[-1] != 1:
        raise ValueError(f"need m_0 == 1, got {list(m)}")
    return sizes


def complete_coefficient(sizes_by_level: Sequence[int], a: int, k: int) -> int:
    """c(a, k) = m_a (m_{a-1} - 1) ... (m_{a-k+1} - 1) m_{a-k}; c(a, 0) = m_a."""
    mm = sizes_by_level
    if k == 0:
        return mm[a]
    c = mm[a] * mm[a - k]
    for j in range(1, k):
        c *= mm[a - j] - 1
    return c


def closed_complete(m: Sequence[int]) -> RationalFn:
    """Complete layered graph with level sizes [m_n, ..., m_1, 1]."""
    mm = _check_complete(m)[::-1]
    n = len(mm) - 1
    coeffs = [0] * (n + 2)
    coeffs[0] = 1
    for k in range(n + 1):
        coeffs[k + 1] -= (-1) ** k * sum(complete_coefficient(mm, a, k) for a in range(k, n + 1))
    return RationalFn(ONE_MINUS_T, IntPoly(coeffs))


def closed_dual_lnq(n: int, q: int) -> IntPoly:
    """Dual series of the subspace lattice algebra: 1 + t sum_{m<n} [n,m]_q prod_{i=1}^{n-m-1} (1 + t q^i)."""
    acc = IntPoly()
    for m in range(n):
        acc = acc + _prod_linear([q**i for i in range(1, n - m)], 1) * q_binomial(n, m, q)
    return IntPoly.one() + IntPoly([0, 1]) * acc


def closed_dual_lnq_uncorrected(n: int, q: int) -> IntPoly:
    """1 + sum_{m<n} [n,m]_q (1 + t q) ... (1 + t q^(n-m-1)), without the factor t.

    Kept only to demonstrate that it fails the Koszul identity (its constant
    term exceeds 1 for n >= 1).
    """
    acc = IntPoly()
    for m in range(n):
        acc = acc + _prod_linear([q**i for i in range(1, n - m)], 1) * q_binomial(n, m, q)
    return IntPoly.one() + acc


def closed_dual_complete(m: Sequence[int]) -> IntPoly:
    """1 + sum_k sum_{a>=k} m_a (m_{a-1} - 1) ... (m_{a-k+1} - 1) t^k."""
    mm = _check_complete(m)[::-1]
    n = len(mm) - 1
    coeffs = [1] + [0] * n
    for k in range(1, n + 1):
        for a in range(k, n + 1):
            c = mm[a]
            for j in range(1, k):
                c *= mm[a - j] - 1
            coeffs[k] += c
    return IntPoly(coeffs)
