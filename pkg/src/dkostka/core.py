"""Partitions, double partitions, dominance orders and the basic statistics.

A partition is a :class:`Partition` (a validated tuple subclass, so it compares
and hashes like the plain tuple of its parts).  A double partition is a pair
``(first, second)`` of partitions; its size is the sum of the two sizes.
"""
from __future__ import annotations

import re
from functools import cache
from itertools import accumulate, zip_longest
from math import factorial
from typing import Iterable, NamedTuple, Sequence

from .poly import IntPoly, RatFn

__all__ = [
    "Partition",
    "DoublePartition",
    "partitions",
    "double_partitions",
    "dominance_le",
    "double_dominance_le",
    "c_sequence",
    "n_stat",
    "a_stat",
    "z_int",
    "z_double",
    "total_order",
    "parse_double_partition",
    "format_double_partition",
    "format_partition",
    "parse_partition",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def __add__(self, other):  # partwise sum, not concatenation
        return Partition(a + b for a, b in zip_longest(self, other, fillvalue=0))

    def union(self, other: Sequence[int]) -> Partition:
        return Partition(sorted((*self, *other), reverse=True))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return format_partition(self) or "-"


class DoublePartition(NamedTuple):
    first: Partition
    second: Partition

    @classmethod
    def of(cls, first: Iterable[int] = (), second: Iterable[int] = ()) -> DoublePartition:
        return cls(Partition(first), Partition(second))

    @property
    def size(self) -> int:
        return sum(self.first) + sum(self.second)

    def __str__(self) -> str:
        return format_double_partition(self)


def _coerce_dp(x) -> DoublePartition:
    if isinstance(x, DoublePartition) and isinstance(x.first, Partition) and isinstance(x.second, Partition):
        return x
    if isinstance(x, str):
        return parse_double_partition(x)
    a, b = x
    return DoublePartition(Partition(a), Partition(b))


# ---------------------------------------------------------------------------
# enumeration

@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order ((n) first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first, *tail)

    return tuple(Partition(p) for p in gen(n, n))


@cache
def double_partitions(n: int) -> tuple[DoublePartition, ...]:
    """All double partitions of total size n, grouped by the size of the first part (descending)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(
        DoublePartition(a, b) for k in range(n, -1, -1) for a in partitions(k) for b in partitions(n - k)
    )


# ---------------------------------------------------------------------------
# orders

def dominance_le(a: Sequence[int], b: Sequence[int]) -> bool:
    """a <= b in dominance order on compositions of the same size."""
    if sum(a) != sum(b):
        raise ValueError("dominance comparison needs equal sizes")
    return all(x <= y for x, y in zip_longest(accumulate(a), accumulate(b), fillvalue=sum(a)))


def c_sequence(lam: DoublePartition, length: int | None = None) -> tuple[int, ...]:
    """Interleave (l'_1, l''_1, l'_2, l''_2, ...), padded to ``length`` pairs."""
    lam = _coerce_dp(lam)
    k = max(len(lam.first), len(lam.second)) if length is None else length
    a = tuple(lam.first) + (0,) * (k - len(lam.first))
    b = tuple(lam.second) + (0,) * (k - len(lam.second))
    return tuple(x for pair in zip(a, b) for x in pair)


def double_dominance_le(lam, mu) -> bool:
    lam, mu = _coerce_dp(lam), _coerce_dp(mu)
    if lam.size != mu.size:
        raise ValueError("dominance comparison needs equal sizes")
    return dominance_le(c_sequence(lam), c_sequence(mu))


# ---------------------------------------------------------------------------
# statistics

def n_stat(lam: Sequence[int]) -> int:
    """n(lambda) = sum (i-1) lambda_i."""
    return sum(i * p for i, p in enumerate(lam))


def a_stat(lam) -> int:
    """a(L) = 2n(l') + 2n(l'') + |l''|."""
    lam = _coerce_dp(lam)
    return 2 * n_stat(lam.first) + 2 * n_stat(lam.second) + sum(lam.second)


def z_int(lam: Sequence[int]) -> int:
    """Order of the centralizer of a permutation of cycle type lam."""
    out = 1
    for part, m in Partition(lam).multiplicities().items():
        out *= part**m * factorial(m)
    return out


def z_double(lam) -> RatFn:
    """2^{l(l')+l(l'')} z_{l'} z_{l''} / prod(1 - t^{l'_j}) prod(1 + t^{l''_j})."""
    lam = _coerce_dp(lam)
    num = 2 ** (len(lam.first) + len(lam.second)) * z_int(lam.first) * z_int(lam.second)
    return RatFn(IntPoly(num), z_double_denominator(lam))


def z_double_denominator(lam) -> IntPoly:
    lam = _coerce_dp(lam)
    den = IntPoly(1)
    for p in lam.first:
        den = den * IntPoly({0: 1, p: -1})
    for p in lam.second:
        den = den * IntPoly({0: 1, p: 1})
    return den


# ---------------------------------------------------------------------------
# the canonical total order

def _tie_key(lam: DoublePartition, n: int):
    return (sum(lam.second), tuple(-x for x in c_sequence(lam, n)))


@cache
def total_order(n: int) -> tuple[DoublePartition, ...]:
    """A fixed linear extension of dominance, largest element first.

    Built greedily: at each step take a dominance-maximal element among those
    left, preferring small |l''| and then the lexicographically largest
    c-sequence.
    """
    left = list(double_partitions(n))
    out = []
    while left:
        maximal = [x for x in left if not any(y != x and double_dominance_le(x, y) for y in left)]
        pick = min(maximal, key=lambda x: _tie_key(x, n))
        out.append(pick)
        left.remove(pick)
    return tuple(out)


# ---------------------------------------------------------------------------
# notation: "21^2.3^2" means ((2,1,1), (3,3)); ".21" means ((), (2,1))

_TOKEN = re.compile(r"(\d|\{\d+\})(?:\^(\d|\{\d+\}))?")


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-", "−", "∅"):
        return Partition()
    pos = 0
    parts: list[int] = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad partition notation: {text!r}")
        part = int(m.group(1).strip("{}"))
        mult = int(m.group(2).strip("{}")) if m.group(2) else 1
        if mult == 0:
            raise ValueError(f"zero multiplicity in {text!r}")
        parts.extend([part] * mult)
        pos = m.end()
    if 0 in parts:
        raise ValueError(f"zero part in {text!r}")
    if parts != sorted(parts, reverse=True):
        raise ValueError(f"parts not weakly decreasing in {text!r}")
    return Partition(parts)


def parse_double_partition(text: str) -> DoublePartition:
    """Parse ``first.second``; either side may be empty."""
    text = text.strip()
    if text.count(".") != 1:
        raise ValueError(f"double partition needs exactly one '.': {text!r}")
    a, b = text.split(".")
    return DoublePartition(parse_partition(a), parse_partition(b))


def format_partition(lam: Sequence[int]) -> str:
    out = []
    mult = Partition(lam).multiplicities()
    for part in sorted(mult, reverse=True):
        p = str(part) if part < 10 else f"{{{part}}}"
        m = mult[part]
        out.append(p if m == 1 else f"{p}^{m}" if m < 10 else f"{p}^{{{m}}}")
    return "".join(out)


def format_double_partition(lam) -> str:
    lam = _coerce_dp(lam)
    return f"{format_partition(lam.first)}.{format_partition(lam.second)}"
