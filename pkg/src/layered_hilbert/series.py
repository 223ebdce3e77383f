"""Exact integer polynomials and truncated power series.

Everything here works over Python ints, so coefficients never overflow.
Values are immutable; all operations return new objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Sequence


class NonUnitConstantTerm(ArithmeticError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


class NotDivisible(ArithmeticError):
    """Raised by exact polynomial division when the remainder is nonzero."""


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial in t with integer coefficients, ``coeffs[k]`` is the t^k term.

    The zero polynomial has an empty coefficient tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @classmethod
    def one(cls) -> IntPoly:
        return cls([1])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return IntPoly(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self.coeffs)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(other * a for a in self.coeffs)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_neg(self) -> IntPoly:
        return poly_substitute_neg(self)

    def to_series(self, truncation: int) -> IntSeries:
        return IntSeries(self.coeffs[: truncation + 1], truncation)

    def tolist(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        return format_terms(self.coeffs) or "0"


@dataclass(frozen=True)
class IntSeries:
    """Power series known through degree ``truncation`` (exactly T+1 coefficients)."""

    coeffs: tuple[int, ...]
    truncation: int

    def __init__(self, coeffs: Iterable[int], truncation: int):
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        c = [int(x) for x in coeffs][: truncation + 1]
        c += [0] * (truncation + 1 - len(c))
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "truncation", truncation)

    @classmethod
    def one(cls, truncation: int) -> IntSeries:
        return cls([1], truncation)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, truncation: int) -> IntSeries:
        return IntSeries(self.coeffs, min(truncation, self.truncation))

    def __add__(self, other: IntSeries) -> IntSeries:
        return series_add(self, other)

    def __sub__(self, other: IntSeries) -> IntSeries:
        return series_sub(self, other)

    def __neg__(self) -> IntSeries:
        return IntSeries((-a for a in self.coeffs), self.truncation)

    def __mul__(self, other: IntSeries | IntPoly | int) -> IntSeries:
        if isinstance(other, int):
            return IntSeries((other * a for a in self.coeffs), self.truncation)
        if isinstance(other, IntPoly):
            other = other.to_series(self.truncation)
        return series_mul(self, other)

    __rmul__ = __mul__

    def substitute_neg(self) -> IntSeries:
        return IntSeries(((-1) ** k * c for k, c in enumerate(self.coeffs)), self.truncation)

    def inverse(self) -> IntSeries:
        return series_inverse(self)

    def to_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def tolist(self) -> list[int]:
        return list(self.coeffs)

    def to_dict(self) -> dict:
        return {"coeffs": list(self.coeffs), "truncation": self.truncation}

    @classmethod
    def from_dict(cls, data: dict) -> IntSeries:
        return cls(data["coeffs"], data["truncation"])

    def __str__(self) -> str:
        body = format_terms(self.coeffs)
        tail = f"O(t^{{{self.truncation + 1}}})"
        if not body:
            return tail
        return f"{body} + {tail}"


@dataclass(frozen=True)
class RationalFn:
    """A quotient num/den with den(0) == 1, so the expansion has integer coefficients."""

    num: IntPoly
    den: IntPoly

    def __post_init__(self):
        if self.den[0] != 1:
            raise ValueError(f"denominator must have constant term 1, got {self.den}")

    def series(self, truncation: int) -> IntSeries:
        return self.num.to_series(truncation) * series_inverse(self.den.to_series(truncation))

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


def format_terms(coeffs: Sequence[int], var: str = "t") -> str:
    """Render ``1 - 4t + 4t^2``; zero terms are skipped."""
    parts: list[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            term = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            term = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    if p.is_zero or q.is_zero:
        return IntPoly()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return IntPoly(out)


def poly_substitute_neg(p: IntPoly) -> IntPoly:
    """Return p(-t)."""
    return IntPoly(-c if k & 1 else c for k, c in enumerate(p.coeffs))


def poly_div_exact(p: IntPoly, q: IntPoly) -> IntPoly:
    """Return r with q*r == p, raising NotDivisible otherwise.

    Long division from the top degree; a non-integer quotient coefficient also
    counts as failure since we stay in Z[t].
    """
    if q.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return IntPoly()
    rem = list(p.coeffs)
    dq = q.degree
    lead = q.coeffs[-1]
    if len(rem) - 1 < dq:
        raise NotDivisible(f"{p} is not divisible by {q}")
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1 - dq, -1, -1):
        c, r = divmod(rem[i + dq], lead)
        if r:
            raise NotDivisible(f"{p} is not divisible by {q}")
        quot[i] = c
        if c:
            for j, b in enumerate(q.coeffs):
                rem[i + j] -= c * b
    if any(rem):
        raise NotDivisible(f"{p} is not divisible by {q}")
    return IntPoly(quot)


def series_add(a: IntSeries, b: IntSeries) -> IntSeries:
    T = min(a.truncation, b.truncation)
    return IntSeries((a[k] + b[k] for k in range(T + 1)), T)


def series_sub(a: IntSeries, b: IntSeries) -> IntSeries:
    T = min(a.truncation, b.truncation)
    return IntSeries((a[k] - b[k] for k in range(T + 1)), T)


def series_mul(a: IntSeries, b: IntSeries) -> IntSeries:
    T = min(a.truncation, b.truncation)
    out = [0] * (T + 1)
    for i in range(T + 1):
        ai = a[i]
        if ai:
            for j in range(T + 1 - i):
                out[i + j] += ai * b[j]
    return IntSeries(out, T)


def series_inverse(s: IntSeries) -> IntSeries:
    """Multiplicative inverse of a series with constant term +-1."""
    c0 = s[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {c0} is not a unit in Z")
    T = s.truncation
    inv = [0] * (T + 1)
    inv[0] = c0
    for k in range(1, T + 1):
        acc = sum(s[j] * inv[k - j] for j in range(1, k + 1))
        # c0 * inv[k] = -acc and c0 == 1/c0
        inv[k] = -acc * c0
    return IntSeries(inv, T)
