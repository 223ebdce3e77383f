"""Counting the normal-word basis of A(Gamma) directly.

Basis words are sequences of letters (v, k), v of positive level and
1 <= k <= |v|, in which no letter covers the next one; (v, k) covers (u, l)
when v > u and k = |v| - |u|. A word has degree sum(k). Graded counts come
from a transfer-matrix recursion over the last letter, which is independent
of the zeta-matrix machinery in :mod:`layered_hilbert.hilbert`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .graph import LayeredGraph

DEFAULT_WORD_CAP = 10**6


class EnumerationBudgetExceeded(RuntimeError):
    pass


class Letter(NamedTuple):
    v: str
    k: int


@dataclass(frozen=True)
class WordCount:
    counts: tuple[int, ...]

    @property
    def truncation(self) -> int:
        return len(self.counts) - 1

    def to_dict(self) -> dict:
        return {"counts": list(self.counts), "truncation": self.truncation}


def letters(g: LayeredGraph) -> list[Letter]:
    """All letters, ordered by (level desc, id, k)."""
    return [Letter(v, k) for v in g.order() for k in range(1, g.levels[v] + 1)]


def covers(a: Letter, b: Letter, g: LayeredGraph) -> bool:
    return g.reachable(a.v, b.v) and a.k == g.level(a.v) - g.level(b.v)


def _allowed(g: LayeredGraph, alphabet: list[Letter]) -> list[list[int]]:
    """allowed[i] lists the letters that may follow letter i."""
    return [
        [j for j, b in enumerate(alphabet) if not covers(a, b, g)] for a in alphabet
    ]


def _ending_counts(g: LayeredGraph, truncation: int):
    alphabet = letters(g)
    allowed = _allowed(g, alphabet)
    # ends[d][i]: words of degree d whose last letter is alphabet[i]
    ends = [[0] * len(alphabet) for _ in range(truncation + 1)]
    for d in range(1, truncation + 1):
        row = ends[d]
        for j, b in enumerate(alphabet):
            if b.k == d:
                row[j] += 1
        for i, a in enumerate(alphabet):
            for j in allowed[i]:
                d2 = d + alphabet[j].k
                if d2 <= truncation and ends[d][i]:
                    ends[d2][j] += ends[d][i]
    return alphabet, ends


def count_words(g: LayeredGraph, truncation: int) -> WordCount:
    """Number of basis words of each degree 0..truncation."""
    _, ends = _ending_counts(g, truncation)
    counts = [1] + [sum(ends[d]) for d in range(1, truncation + 1)]
    return WordCount(tuple(counts))


def count_words_from(g: LayeredGraph, v: str, truncation: int) -> list[int]:
    """Per-degree counts of basis words whose first letter sits on vertex v.

    Reverses the recursion: a word starting with (v, k) is (v, k) alone or
    (v, k) followed by a word whose first letter (v, k) does not cover.
    """
    if g.level(v) < 1:
        raise ValueError(f"vertex {v!r} has level 0 and starts no words")
    alphabet = letters(g)
    allowed = _allowed(g, alphabet)
    starts = [[0] * len(alphabet) for _ in range(truncation + 1)]
    for d in range(1, truncation + 1):
        for i, a in enumerate(alphabet):
            if a.k > d:
                continue
            rest = d - a.k
            starts[d][i] = 1 if rest == 0 else sum(starts[rest][j] for j in allowed[i])
    return [sum(starts[d][i] for i, a in enumerate(alphabet) if a.v == v) for d in range(truncation + 1)]


def _letter_key(g: LayeredGraph, a: Letter):
    return (-g.levels[a.v], a.v, a.k)


def enumerate_words(g: LayeredGraph, degree: int, cap: int = DEFAULT_WORD_CAP) -> list[tuple[Letter, ...]]:
    """Brute-force listing of the basis words of one degree, lexicographically sorted.

    Builds every composition of ``degree`` into letter sizes and keeps the
    sequences with no covering neighbours.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        return [()]
    alphabet = letters(g)
    by_k: dict[int, list[Letter]] = {}
    for a in alphabet:
        by_k.setdefault(a.k, []).append(a)
    words: list[tuple[Letter, ...]] = []
    seen = 0
    for comp in _compositions(degree):
        pools = [by_k.get(k, []) for k in comp]
        for word in product(*pools):
            seen += 1
            if seen > cap:
                raise EnumerationBudgetExceeded(f"more than {cap} candidate words at degree {degree}")
            if all(not covers(word[i], word[i + 1], g) for i in range(len(word) - 1)):
                words.append(word)
    words.sort(key=lambda w: [_letter_key(g, a) for a in w])
    return words


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def format_word(word: tuple[Letter, ...]) -> str:
    return "".join(f"({a.v},{a.k})" for a in word)
