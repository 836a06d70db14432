"""Semistandard (skew) tableaux, reading words, charge and jeu de taquin.

A tableau is stored as a tuple of rows; row ``i`` of a skew tableau of shape
``outer/inner`` holds the entries in columns ``inner[i] .. outer[i]-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterator, Sequence

from .core import DoublePartition, Partition, _coerce_dp
from .poly import IntPoly

__all__ = [
    "Tableau",
    "enumerate_sst",
    "reading_word",
    "is_lattice",
    "charge",
    "rectify",
    "skew_embedding",
    "double_tableaux",
    "lr_coefficient",
    "kostka_number",
    "kostka_charge",
    "double_kostka_charge",
    "count_double_sst",
]


@dataclass(frozen=True)
class Tableau:
    outer: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != len(self.outer):
            raise ValueError("row count does not match the shape")
        for i, row in enumerate(self.rows):
            lo = self.inner[i] if i < len(self.inner) else 0
            if len(row) != self.outer[i] - lo:
                raise ValueError(f"row {i} has the wrong length")

    def cells(self) -> Iterator[tuple[int, int, int]]:
        for i, row in enumerate(self.rows):
            lo = self.inner[i] if i < len(self.inner) else 0
            for j, x in enumerate(row):
                yield i, lo + j, x

    def entry(self, i: int, j: int) -> int | None:
        if i >= len(self.rows):
            return None
        lo = self.inner[i] if i < len(self.inner) else 0
        k = j - lo
        return self.rows[i][k] if 0 <= k < len(self.rows[i]) else None

    def weight(self) -> tuple[int, ...]:
        top = max((x for _, _, x in self.cells()), default=0)
        w = [0] * top
        for _, _, x in self.cells():
            w[x - 1] += 1
        return tuple(w)

    def is_semistandard(self) -> bool:
        for i, j, x in self.cells():
            right = self.entry(i, j + 1)
            below = self.entry(i + 1, j)
            if right is not None and right < x:
                return False
            if below is not None and below <= x:
                return False
        return True


def _horizontal_strips(inner: tuple[int, ...], outer: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """Shapes nu with inner <= nu <= outer, nu/inner a horizontal strip of size k."""
    rows = len(outer)
    cur = list(inner) + [0] * (rows - len(inner))

    def go(i: int, left: int):
        if i == rows:
            if left == 0:
                yield tuple(cur)
            return
        # row i may grow up to the old length of row i-1 (strip condition) and outer[i]
        cap = outer[i] if i == 0 else min(outer[i], base[i - 1])
        for add in range(min(left, cap - base[i]), -1, -1):
            cur[i] = base[i] + add
            yield from go(i + 1, left - add)
        cur[i] = base[i]

    base = tuple(cur)
    yield from go(0, k)


def enumerate_sst(outer: Sequence[int], weight: Sequence[int], inner: Sequence[int] = ()) -> Iterator[Tableau]:
    """All semistandard tableaux of shape outer/inner with the given content."""
    outer = Partition(outer)
    inner = Partition(inner)
    if len(inner) > len(outer) or any(a < b for a, b in zip(outer, inner)):
        raise ValueError("inner shape is not contained in outer shape")
    if sum(outer) - sum(inner) != sum(weight):
        return
    start = tuple(inner) + (0,) * (len(outer) - len(inner))

    def go(letter: int, shape: tuple[int, ...], fill: list[list[int]]):
        if letter == len(weight):
            if shape == tuple(outer):
                yield Tableau(outer, inner, tuple(tuple(r) for r in fill))
            return
        for nxt in _horizontal_strips(shape, outer, weight[letter]):
            new = [row + [letter + 1] * (b - a) for row, a, b in zip(fill, shape, nxt)]
            yield from go(letter + 1, nxt, new)

    yield from go(0, start, [[] for _ in outer])


def reading_word(tab: Tableau) -> tuple[int, ...]:
    """Rows read right to left, from the top row down."""
    return tuple(x for row in tab.rows for x in reversed(row))


def is_lattice(word: Sequence[int]) -> bool:
    """Every prefix contains at least as many i's as (i+1)'s."""
    counts: dict[int, int] = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def _standard_charge(word: Sequence[int], positions: Sequence[int]) -> int:
    """Charge of the standard subword at ``positions`` (letters 1..m)."""
    pos = {word[p]: p for p in positions}
    idx = 0
    total = 0
    for r in range(2, len(positions) + 1):
        if pos[r] < pos[r - 1]:
            idx += 1
        total += idx
    return total


def charge(word: Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge of a word whose content is a partition.

    Standard subwords are extracted by scanning rightwards (cyclically) from
    the left end for 1, 2, 3, ...; a standard word's charge is the sum of
    indices, where the index increases by one each time r+1 lies to the left
    of r.  With the top-row-first, right-to-left reading word this is the
    convention under which the charge sum gives K_{lambda mu}(t).
    """
    word = list(word)
    content = [0] * max(word, default=0)
    for x in word:
        content[x - 1] += 1
    if any(a < b for a, b in zip(content, content[1:])):
        raise ValueError("charge needs a word of partition content")
    alive = list(range(len(word)))
    total = 0
    while alive:
        top = max(word[p] for p in alive)
        chosen: list[int] = []
        cursor = -1  # start scanning from the left end
        for letter in range(1, top + 1):
            cands = [p for p in alive if word[p] == letter]
            right = [p for p in cands if p > cursor]
            p = min(right) if right else min(cands)
            chosen.append(p)
            cursor = p
        total += _standard_charge(word, chosen)
        chosen_set = set(chosen)
        alive = [p for p in alive if p not in chosen_set]
    return total


def rectify(tab: Tableau) -> Tableau:
    """Straighten a skew tableau by jeu de taquin slides into inner corners."""
    rows = [[None] * (tab.inner[i] if i < len(tab.inner) else 0) + list(r) for i, r in enumerate(tab.rows)]

    def get(i, j):
        if i < len(rows) and j < len(rows[i]):
            return rows[i][j]
        return None

    while True:
        # an inner corner: empty cell whose right and lower neighbours are not empty-holes
        corner = None
        for i in range(len(rows) - 1, -1, -1):
            holes = [j for j, x in enumerate(rows[i]) if x is None]
            if holes:
                corner = (i, holes[-1])
                break
        if corner is None:
            break
        i, j = corner
        while True:
            right = get(i, j + 1)
            below = get(i + 1, j)
            if right is None and below is None:
                # hole leaves the shape
                if j == len(rows[i]) - 1:
                    rows[i].pop()
                else:
                    raise AssertionError("jeu de taquin left a hole inside a row")
                break
            if below is None or (right is not None and right < below):
                rows[i][j] = right
                j += 1
            else:
                rows[i][j] = below
                i += 1
        while rows and not rows[-1]:
            rows.pop()
    shape = Partition(len(r) for r in rows)
    return Tableau(shape, Partition(), tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# double tableaux

def skew_embedding(lam) -> tuple[Partition, Partition, int]:
    """Skew shape xi/theta holding l' to the upper right of l''.

    Returns (xi, theta, k') where the first k' rows of xi carry l'.
    """
    lam = _coerce_dp(lam)
    a = lam.second[0] if lam.second else 0
    k1 = len(lam.first)
    xi = Partition((*(p + a for p in lam.first), *lam.second))
    theta = Partition((a,) * k1) if a else Partition()
    return xi, theta, k1


def double_tableaux(lam, weight: Sequence[int]) -> Iterator[Tableau]:
    """SST(L, weight): fillings of the skew embedding."""
    xi, theta, _ = skew_embedding(lam)
    yield from enumerate_sst(xi, weight, theta)


def double_reading_word(tab: Tableau) -> tuple[int, ...]:
    """w(T) = w(T+) w(T-); with the skew embedding this is the ordinary reading word."""
    return reading_word(tab)


@cache
def lr_coefficient(lam1: Partition, lam2: Partition, nu: Partition) -> int:
    """c^nu_{lam1, lam2}, counted as lattice fillings of the double shape."""
    lam1, lam2, nu = Partition(lam1), Partition(lam2), Partition(nu)
    if sum(lam1) + sum(lam2) != sum(nu):
        return 0
    return sum(1 for T in double_tableaux((lam1, lam2), nu) if is_lattice(reading_word(T)))


@cache
def kostka_number(lam: Partition, mu: Sequence[int]) -> int:
    return sum(1 for _ in enumerate_sst(lam, tuple(mu)))


@cache
def kostka_charge(lam: Partition, mu: Partition) -> IntPoly:
    """K_{lam,mu}(t) = sum over SST(lam, mu) of t^charge."""
    lam, mu = Partition(lam), Partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("K_{lam,mu} needs |lam| = |mu|")
    acc: dict[int, int] = {}
    for S in enumerate_sst(lam, mu):
        c = charge(reading_word(S))
        acc[c] = acc.get(c, 0) + 1
    return IntPoly(acc)


@cache
def double_kostka_charge(lam: DoublePartition, mu2: Partition) -> IntPoly:
    """K_{L,(-;mu'')}(t) = t^{|l'|} * sum over SST(L, mu'') of t^{2 charge(rectified T)}."""
    lam = _coerce_dp(lam)
    mu2 = Partition(mu2)
    if lam.size != sum(mu2):
        raise ValueError("size mismatch")
    acc: dict[int, int] = {}
    for T in double_tableaux(lam, mu2):
        c = charge(reading_word(rectify(T)))
        acc[2 * c] = acc.get(2 * c, 0) + 1
    return IntPoly(acc).shift(sum(lam.first))


def count_double_sst(lam, weight: Sequence[int]) -> int:
    """|SST(L, weight)| via splitting the content between the two shapes."""
    lam = _coerce_dp(lam)
    n1 = sum(lam.first)
    total = 0

    def splits(i: int, left: int, alpha: list[int]):
        if i == len(weight):
            if left == 0:
                yield tuple(alpha)
            return
        for x in range(min(weight[i], left), -1, -1):
            alpha.append(x)
            yield from splits(i + 1, left - x, alpha)
            alpha.pop()

    for alpha in splits(0, n1, []):
        beta = tuple(w - a for w, a in zip(weight, alpha))
        total += _sst_count_comp(lam.first, alpha) * _sst_count_comp(lam.second, beta)
    return total


@cache
def _sst_count_comp(lam: Partition, weight: tuple[int, ...]) -> int:
    return sum(1 for _ in enumerate_sst(lam, weight))
