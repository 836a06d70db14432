"""Brute-force point counts over a prime field F_q.

This is an independent oracle: it never touches symmetric functions.  It
classifies enhanced nilpotent pairs (x, v) on V = F_q^n and counts x-stable
subspaces with prescribed types, which should reproduce the Hall-side
polynomials g^M_N(q) and G(q) evaluated at q.

Matrices are tuples of rows with entries in range(q); vectors are tuples.
"""
from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass
from functools import cache
from itertools import product
from typing import Iterator, Sequence

from .core import DoublePartition, Partition, _coerce_dp, double_partitions, partitions

__all__ = [
    "MAX_N",
    "MAX_Q",
    "check_field",
    "jordan_type",
    "commutant_basis",
    "enhanced_type",
    "representative",
    "representatives",
    "subspaces",
    "g_counts",
    "count_g_variety",
    "bimodule_counts",
    "count_bimodule_varieties",
    "orbit_census",
    "OracleRow",
    "compare_with_polynomials",
]

MAX_N = 4
MAX_Q = 5

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def check_field(n: int, q: int, *, max_n: int = MAX_N) -> None:
    """Reject parameters outside what brute force can count in reasonable time."""
    if not _is_prime(q):
        raise ValueError(f"q = {q} must be prime")
    if q > MAX_Q:
        raise ValueError(f"q = {q} exceeds the counting bound {MAX_Q}")
    if n > max_n:
        raise ValueError(f"n = {n} exceeds the counting bound {max_n}")


# ---------------------------------------------------------------------------
# linear algebra mod q

def matmul(a: Matrix, b: Matrix, q: int) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % q for col in cols) for row in a)


def matvec(a: Matrix, v: Sequence[int], q: int) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) % q for row in a)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def rref(rows: Sequence[Sequence[int]], q: int) -> list[list[int]]:
    """Reduced row echelon form (zero rows dropped)."""
    m = [list(r) for r in rows]
    out: list[list[int]] = []
    if not m:
        return out
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % q), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, q)
        m[r] = [(x * inv) % q for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % q for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r]]


def rank(rows: Sequence[Sequence[int]], q: int) -> int:
    return len(rref(rows, q))


def nullspace(a: Sequence[Sequence[int]], q: int, ncols: int) -> list[list[int]]:
    """Basis of {y : a y = 0}."""
    red = rref(a, q) if a else []
    pivots = []
    for row in red:
        pivots.append(next(i for i, x in enumerate(row) if x))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        y = [0] * ncols
        y[f] = 1
        for row, p in zip(red, pivots):
            y[p] = (-row[f]) % q
        basis.append(y)
    return basis


def inverse(a: Matrix, q: int) -> Matrix:
    n = len(a)
    aug = [list(row) + list(e) for row, e in zip(a, identity(n))]
    red = rref(aug, q)
    if len(red) < n or any(red[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def _powers(x: Matrix, q: int) -> list[Matrix]:
    n = len(x)
    out = [identity(n)]
    for _ in range(n):
        out.append(matmul(out[-1], x, q))
    return out


def _type_from_ranks(ranks: Sequence[int]) -> Partition:
    # ranks[i] = rank of x^i (ranks[0] = dimension)
    at_least = [ranks[i - 1] - ranks[i] for i in range(1, len(ranks))]
    return Partition(at_least).conjugate() if any(at_least) else Partition()


def jordan_type(x: Matrix, q: int) -> Partition:
    """Jordan type of a nilpotent matrix, from the ranks of its powers."""
    n = len(x)
    pw = _powers(x, q)
    if any(any(row) for row in pw[n]):
        raise ValueError("matrix is not nilpotent")
    return _type_from_ranks([rank(p, q) for p in pw])


def commutant_basis(x: Matrix, q: int) -> list[Matrix]:
    """Basis of {g : g x = x g}, solving the n^2 x n^2 linear system."""
    n = len(x)
    eqs = []
    for i in range(n):
        for j in range(n):
            # (g x - x g)_{ij} = sum_k g_ik x_kj - x_ik g_kj
            row = [0] * (n * n)
            for k in range(n):
                row[i * n + k] = (row[i * n + k] + x[k][j]) % q
                row[k * n + j] = (row[k * n + j] - x[i][k]) % q
            eqs.append(row)
    sols = nullspace(eqs, q, n * n)
    return [tuple(tuple(s[i * n:(i + 1) * n]) for i in range(n)) for s in sols]


def _span_dims(x: Matrix, basis: list[Sequence[int]], q: int) -> list[int]:
    """dim x^i W for i = 0..n, where W is spanned by ``basis`` (columns vectors given as rows)."""
    n = len(x)
    dims = []
    cur = [list(b) for b in basis]
    for _ in range(n + 1):
        cur = rref(cur, q) if cur else []
        dims.append(len(cur))
        cur = [list(matvec(x, b, q)) for b in cur]
    return dims


def _types_for_subspace(x: Matrix, w_basis: list[Sequence[int]], q: int) -> tuple[Partition, Partition]:
    """(type of x on W, type of x on V/W) for an x-stable W."""
    d = len(w_basis)
    sub = _span_dims(x, w_basis, q)
    # dim of x^i V + W, minus dim W, is the rank of the induced map's i-th power
    pw = _powers(x, q)
    quo = []
    for p in pw:
        cols = [list(c) for c in zip(*p)]
        quo.append(rank(cols + [list(b) for b in w_basis], q) - d)
    return _type_from_ranks(sub), _type_from_ranks(quo)


def enhanced_type(x: Matrix, v: Sequence[int], q: int) -> DoublePartition:
    """Orbit label (l'; l'') of (x, v): W = E^x v, l' = type(x|_W), l'' = type(x|_{V/W})."""
    gens = commutant_basis(x, q)
    w = rref([list(matvec(g, v, q)) for g in gens], q)
    a, b = _types_for_subspace(x, w, q)
    return DoublePartition(a, b)


# ---------------------------------------------------------------------------
# representatives

def representative(lam, q: int) -> tuple[Matrix, Vector]:
    """Normal form: x of Jordan type l' + l'' (partwise), v = sum of e_{i, l'_i}.

    Block i has basis e_{i,1..m_i} with x e_{i,j} = e_{i,j-1}.  The result is
    checked with :func:`enhanced_type`.
    """
    lam = _coerce_dp(lam)
    sizes = lam.first + lam.second
    n = sum(sizes)
    x = [[0] * n for _ in range(n)]
    v = [0] * n
    start = 0
    for i, m in enumerate(sizes):
        for j in range(1, m):
            x[start + j - 1][start + j] = 1
        k = lam.first[i] if i < len(lam.first) else 0
        if k:
            v[start + k - 1] = 1
        start += m
    xm, vv = tuple(map(tuple, x)), tuple(v)
    got = enhanced_type(xm, vv, q)
    if got != lam:
        raise AssertionError(f"normal form for {lam} has type {got}")
    return xm, vv


def _random_invertible(n: int, q: int, rng: random.Random) -> Matrix:
    while True:
        g = tuple(tuple(rng.randrange(q) for _ in range(n)) for _ in range(n))
        if rank(g, q) == n:
            return g


def representatives(lam, q: int, count: int = 2, seed: int = 0) -> list[tuple[Matrix, Vector]]:
    """The normal form plus random GL_n-conjugates of it, each verified."""
    lam = _coerce_dp(lam)
    x, v = representative(lam, q)
    out = [(x, v)]
    rng = random.Random(seed * 1000 + q)
    n = lam.size
    while len(out) < count:
        g = _random_invertible(n, q, rng)
        gi = inverse(g, q)
        y = matmul(matmul(g, x, q), gi, q)
        w = matvec(g, v, q)
        if enhanced_type(y, w, q) != lam:
            raise AssertionError(f"conjugate of the normal form of {lam} changed type")
        out.append((y, w))
    return out


# ---------------------------------------------------------------------------
# subspaces

@cache
def subspaces(n: int, d: int, q: int) -> tuple[tuple[Vector, ...], ...]:
    """All d-dimensional subspaces of F_q^n, as RREF bases."""
    out = []
    for pivots in _combinations(n, d):
        free_slots = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
        for vals in product(range(q), repeat=len(free_slots)):
            rows = [[0] * n for _ in range(d)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), val in zip(free_slots, vals):
                rows[r][c] = val
            out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def _combinations(n: int, d: int):
    from itertools import combinations

    return combinations(range(n), d)


def _stable_subspaces(x: Matrix, q: int) -> Iterator[tuple[Vector, ...]]:
    n = len(x)
    for d in range(n + 1):
        for w in subspaces(n, d, q):
            if all(rank(list(w) + [matvec(x, b, q)], q) == d for b in w):
                yield w


def _contains(w: Sequence[Vector], v: Sequence[int], q: int) -> bool:
    return rank(list(w) + [v], q) == len(w)


# ---------------------------------------------------------------------------
# counts

def g_counts(x: Matrix, v: Sequence[int], q: int) -> Counter:
    """For each N, the number of x-stable W with v in W, type(x|_W) = n', type(x|_{V/W}) = n''."""
    out: Counter = Counter()
    for w in _stable_subspaces(x, q):
        if _contains(w, v, q):
            a, b = _types_for_subspace(x, list(w), q)
            out[DoublePartition(a, b)] += 1
    return out


def count_g_variety(mu, nu, q: int, rep: tuple[Matrix, Vector] | None = None) -> int:
    mu, nu = _coerce_dp(mu), _coerce_dp(nu)
    check_field(mu.size, q)
    x, v = rep if rep is not None else representative(mu, q)
    return g_counts(x, v, q).get(nu, 0)


def _split(x: Matrix, w: Sequence[Vector], v: Sequence[int], q: int):
    """Restriction and quotient of (x, v) along W: returns (x|_W, v_W, x|_{V/W}, v mod W)."""
    n = len(x)
    d = len(w)
    basis = [list(b) for b in w]
    for e in identity(n):
        if rank(basis + [list(e)], q) > len(basis):
            basis.append(list(e))
    S = tuple(zip(*basis))  # columns are the new basis
    Si = inverse(S, q)
    xs = matmul(matmul(Si, x, q), S, q)
    vs = matvec(Si, v, q)
    a = tuple(tuple(row[:d]) for row in xs[:d])
    dq = tuple(tuple(row[d:]) for row in xs[d:])
    return a, vs[:d], dq, vs[d:]


def bimodule_counts(x: Matrix, v: Sequence[int], q: int, side: str) -> Counter:
    """Counts keyed (alpha, M).

    left:  W x-stable, type(x|_W) = alpha, (x|_{V/W}, v mod W) of type M.
    right: W x-stable, v in W, (x|_W, v) of type M, type(x|_{V/W}) = alpha.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    out: Counter = Counter()
    for w in _stable_subspaces(x, q):
        if side == "right" and not _contains(w, v, q):
            continue
        a, va, dq, vq = _split(x, w, v, q)
        if side == "left":
            alpha = jordan_type(a, q) if a else Partition()
            mu = enhanced_type(dq, vq, q) if dq else DoublePartition.of()
        else:
            alpha = jordan_type(dq, q) if dq else Partition()
            mu = enhanced_type(a, va, q) if a else DoublePartition.of()
        out[alpha, mu] += 1
    return out


def count_bimodule_varieties(lam, alpha, mu, q: int, side: str, rep=None) -> int:
    lam, mu, alpha = _coerce_dp(lam), _coerce_dp(mu), Partition(alpha)
    check_field(lam.size, q)
    x, v = rep if rep is not None else representative(lam, q)
    return bimodule_counts(x, v, q, side).get((alpha, mu), 0)


# ---------------------------------------------------------------------------
# orbit census

def _generators(n: int, q: int) -> list[Matrix]:
    gens = []
    if n >= 2:
        t = [list(r) for r in identity(n)]
        t[0][1] = 1
        gens.append(tuple(map(tuple, t)))
        sw = [list(r) for r in identity(n)]
        sw[0], sw[1] = sw[1], sw[0]
        gens.append(tuple(map(tuple, sw)))
        cyc = tuple(tuple(int(j == (i + 1) % n) for j in range(n)) for i in range(n))
        gens.append(cyc)
    prim = next(g for g in range(1, q) if all(pow(g, k, q) != 1 for k in range(1, q - 1))) if q > 2 else 1
    if prim != 1:
        d = [list(r) for r in identity(n)]
        d[0][0] = prim
        gens.append(tuple(map(tuple, d)))
    return gens


def nilpotent_matrices(n: int, q: int) -> list[Matrix]:
    out = []
    for flat in product(range(q), repeat=n * n):
        x = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        p = x
        for _ in range(n - 1):
            p = matmul(p, x, q)
        if not any(any(r) for r in p):
            out.append(x)
    return out


def orbit_census(n: int, q: int, samples: int = 3, seed: int = 0) -> dict[DoublePartition, int]:
    """GL_n(F_q)-orbits on nilpotent pairs (x, v): label -> orbit size.

    Orbits are found by breadth-first search under generators of GL_n; each
    orbit's label is computed on its first element and re-checked on a few
    random members.  Raises AssertionError if labels are not constant on an
    orbit or two orbits share a label.
    """
    check_field(n, q, max_n=3)
    gens = [(g, inverse(g, q)) for g in _generators(n, q)]
    pending = {(x, v) for x in nilpotent_matrices(n, q) for v in product(range(q), repeat=n)}
    rng = random.Random(seed)
    sizes: dict[DoublePartition, int] = {}
    while pending:
        start = next(iter(pending))
        seen = {start}
        queue = deque([start])
        while queue:
            x, v = queue.popleft()
            for g, gi in gens:
                nxt = (matmul(matmul(g, x, q), gi, q), matvec(g, v, q))
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        pending -= seen
        label = enhanced_type(*start, q)
        members = list(seen)
        for x, v in rng.sample(members, min(samples, len(members))):
            if enhanced_type(x, v, q) != label:
                raise AssertionError(f"enhanced type not constant on the orbit of {label}")
        if label in sizes:
            raise AssertionError(f"two orbits carry the label {label}")
        sizes[label] = len(seen)
    if set(sizes) != set(double_partitions(n)):
        raise AssertionError("orbit labels do not match the double partitions")
    return sizes


# ---------------------------------------------------------------------------
# comparison with the symmetric-function side

@dataclass(frozen=True)
class OracleRow:
    """One compared quantity: counts on every representative vs the polynomial at q."""

    kind: str  # "g", "left" or "right"
    orbit: DoublePartition
    key: str
    q: int
    counts: tuple[int, ...]
    expected: int
    poly: str

    @property
    def consistent(self) -> bool:
        return len(set(self.counts)) == 1

    @property
    def match(self) -> bool:
        return self.consistent and self.counts[0] == self.expected


def compare_with_polynomials(n: int, q: int, reps: int = 2, seed: int = 0, *, max_n: int = MAX_N) -> list[OracleRow]:
    """Count g and both bimodule varieties for every orbit of size n and compare.

    Every orbit gets ``reps`` verified representatives; a row matches when all
    of them give the same count and that count is the polynomial at q.  Rows
    are listed whenever the count or the polynomial is nonzero.
    """
    from .hall import G_left, G_right, g_double
    from .poly import format_poly

    check_field(n, q, max_n=max_n)
    smaller = [(Partition(a), mu) for m in range(n + 1) for a in partitions(m) for mu in double_partitions(n - m)]
    rows: list[OracleRow] = []
    for lam in double_partitions(n):
        chosen = representatives(lam, q, count=reps, seed=seed)
        g_tab = [g_counts(x, v, q) for x, v in chosen]
        for nu in double_partitions(n):
            poly = g_double(lam, nu)
            counts = tuple(c.get(nu, 0) for c in g_tab)
            rows.append(OracleRow("g", lam, str(nu), q, counts, poly(q), format_poly(poly)))
        for side in ("left", "right"):
            tabs = [bimodule_counts(x, v, q, side) for x, v in chosen]
            for alpha, mu in smaller:
                poly = (G_left(alpha, mu) if side == "left" else G_right(mu, alpha)).get(lam)
                counts = tuple(c.get((alpha, mu), 0) for c in tabs)
                if poly is None and not any(counts):
                    continue
                value = poly(q) if poly is not None else 0
                text = format_poly(poly) if poly is not None else "0"
                key = f"{alpha},{mu}" if side == "left" else f"{mu},{alpha}"
                rows.append(OracleRow(side, lam, key, q, counts, value, text))
    return rows

