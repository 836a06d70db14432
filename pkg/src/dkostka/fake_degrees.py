"""Modified Kostka polynomials from fake degrees of W_n = (Z/2)^n x| S_n.

Characters of W_n are indexed by double partitions; conjugacy classes by
pairs (rho; sigma) of partitions (cycle types of positive and negative
cycles).  The matrix

    Omega_{L,M} = t^N R(chi^L (x) chi^M (x) eps)

built from fake degrees R factors as P Lambda P^T with P lower unitriangular
up to the diagonal t^{a(L)}; the factor P is the modified double Kostka
matrix.  With r = 1 the same machinery (symmetric group on the permutation
representation) gives the one-alphabet modified Kostka-Foulkes polynomials.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import product
from math import factorial, prod
from typing import Callable, Hashable, Sequence

from .core import (
    DoublePartition,
    Partition,
    _coerce_dp,
    a_stat,
    double_partitions,
    n_stat,
    partitions,
    total_order,
    z_int,
)
from .poly import IntPoly, RatFn
from .symfunc import sn_character

__all__ = [
    "wn_classes",
    "class_size",
    "wn_character",
    "sign_character",
    "fake_degree",
    "omega_matrix",
    "solve_p_lambda",
    "modified_kostka_table",
    "modified_double_kostka_table",
    "induced_multiplicity",
]

Class = DoublePartition  # (rho; sigma): positive cycles, negative cycles


def wn_classes(n: int, r: int = 2) -> tuple:
    """Conjugacy classes: pairs (rho; sigma) for r=2, partitions for r=1."""
    if r == 2:
        return double_partitions(n)
    if r == 1:
        return partitions(n)
    raise ValueError("r must be 1 or 2")


def group_order(n: int, r: int) -> int:
    return factorial(n) * (2**n if r == 2 else 1)


def class_size(c, r: int = 2) -> int:
    if r == 1:
        return factorial(sum(c)) // z_int(c)
    c = _coerce_dp(c)
    cent = z_int(c.first) * z_int(c.second) * 2 ** (len(c.first) + len(c.second))
    return group_order(c.size, 2) // cent


def _sub_multisets(parts: Partition):
    """All ways to split a multiset of parts into (chosen, rest), each split once."""
    mult = sorted(parts.multiplicities().items(), reverse=True)
    for counts in product(*(range(m + 1) for _, m in mult)):
        chosen = [p for (p, _), k in zip(mult, counts) for _ in range(k)]
        rest = [p for (p, m), k in zip(mult, counts) for _ in range(m - k)]
        yield Partition(chosen), Partition(rest)


@cache
def wn_character(lam: DoublePartition, cls: DoublePartition) -> int:
    """chi^L at the class (rho; sigma), by inducing chi^{l'} (x) (chi^{l''} twisted by sign on Z/2).

    The first factor ignores the Z/2 parts, the second gets a factor -1 for
    every negative cycle.
    """
    lam, cls = _coerce_dp(lam), _coerce_dp(cls)
    if lam.size != cls.size:
        raise ValueError("character and class sizes differ")
    n1 = sum(lam.first)
    rho, sigma = cls
    total = 0
    for rho1, rho2 in _sub_multisets(rho):
        for sig1, sig2 in _sub_multisets(sigma):
            if sum(rho1) + sum(sig1) != n1:
                continue
            # number of ways the class splits across the two factors
            ways = (z_int(rho) * z_int(sigma)) // (z_int(rho1) * z_int(rho2) * z_int(sig1) * z_int(sig2))
            v1 = sn_character(lam.first, rho1.union(sig1))
            v2 = sn_character(lam.second, rho2.union(sig2)) * (-1) ** len(sig2)
            total += ways * v1 * v2
    return total


def sign_character(cls, r: int = 2) -> int:
    if r == 1:
        c = Partition(cls)
        return (-1) ** (sum(c) - len(c))
    c = _coerce_dp(cls)
    return (-1) ** (c.size - len(c.first))


def _char_det(cls, r: int) -> IntPoly:
    """det(t - w) on the reflection representation (permutation representation if r=1)."""
    if r == 1:
        return prod((IntPoly({p: 1, 0: -1}) for p in Partition(cls)), start=IntPoly(1))
    c = _coerce_dp(cls)
    out = IntPoly(1)
    for p in c.first:
        out = out * IntPoly({p: 1, 0: -1})
    for p in c.second:
        out = out * IntPoly({p: 1, 0: 1})
    return out


@cache
def _class_weights(n: int, r: int) -> dict:
    """prod_i (t^{ir} - 1) / det(t - w) for every class; always a polynomial."""
    top = prod((IntPoly({i * r: 1, 0: -1}) for i in range(1, n + 1)), start=IntPoly(1))
    return {c: top.exact_div(_char_det(c, r)) for c in wn_classes(n, r)}


def fake_degree(chi: Callable[[Hashable], int] | dict, n: int, r: int = 2) -> IntPoly:
    """R(chi) = prod(t^{ir}-1)/|W| sum_w eps(w) chi(w) / det(t - w).

    ``chi`` is a class function, given as a callable or a dict keyed by class.
    """
    values = chi if isinstance(chi, dict) else {c: chi(c) for c in wn_classes(n, r)}
    acc = IntPoly()
    for c, w in _class_weights(n, r).items():
        v = values.get(c, 0)
        if v:
            acc = acc + w * (class_size(c, r) * sign_character(c, r) * v)
    try:
        return acc.exact_div(group_order(n, r))
    except ArithmeticError:
        raise ArithmeticError("fake degree is not an integer polynomial; bad class function?") from None


def _char_table(n: int, r: int):
    if r == 2:
        return {lam: {c: wn_character(lam, c) for c in wn_classes(n, 2)} for lam in double_partitions(n)}
    return {lam: {c: sn_character(lam, c) for c in partitions(n)} for lam in partitions(n)}


@cache
def omega_matrix(n: int, r: int = 2) -> dict:
    """Omega_{L,M} = t^N R(chi^L chi^M eps) with N = n^2 (r=2) or n(n-1)/2 (r=1)."""
    N = n * n if r == 2 else n * (n - 1) // 2
    table = _char_table(n, r)
    keys = list(table)
    out = {}
    for i, a in enumerate(keys):
        for b in keys[i:]:
            prod_chi = {c: table[a][c] * table[b][c] * sign_character(c, r) for c in wn_classes(n, r)}
            v = fake_degree(prod_chi, n, r).shift(N)
            out[a, b] = out[b, a] = v
    return out


def solve_p_lambda(
    omega: dict, order: Sequence, diag_exponent: Callable[[Hashable], int], le: Callable[[Hashable, Hashable], bool]
) -> tuple[dict, dict]:
    """Solve P Lambda P^T = Omega.

    ``order`` lists indices largest first; p_{L,M} may be nonzero only for
    M <= L (``le(M, L)``), p_{L,L} = t^{diag_exponent(L)} and Lambda is
    diagonal.  Returns (P, Lambda) as dicts; raises ArithmeticError if the
    system has no solution of that shape over Q[t].
    """
    asc = list(reversed(order))
    P: dict = {}
    Lam: dict = {}
    for j, mu in enumerate(asc):
        dj = IntPoly.monomial(diag_exponent(mu))
        # Lambda_mu from the diagonal equation
        s = RatFn(omega[mu, mu])
        for k in asc[:j]:
            p = P.get((mu, k))
            if p:
                s = s - Lam[k] * (p * p)
        Lam[mu] = s / (dj * dj)
        if Lam[mu].is_zero():
            raise ArithmeticError(f"singular pivot at {mu}")
        P[mu, mu] = dj
        for lam in asc[j + 1:]:
            s = RatFn(omega[lam, mu])
            for k in asc[:j]:
                a, b = P.get((lam, k)), P.get((mu, k))
                if a and b:
                    s = s - Lam[k] * (a * b)
            if s.is_zero():
                continue
            val = s / (Lam[mu] * dj)
            if not val.is_polynomial():
                raise ArithmeticError(f"p[{lam},{mu}] = {val} is not a polynomial")
            if not le(mu, lam):
                raise ArithmeticError(f"p[{lam},{mu}] nonzero although {mu} is not below {lam}")
            P[lam, mu] = val.num
    return P, Lam


@cache
def modified_double_kostka_table(n: int) -> dict[tuple[DoublePartition, DoublePartition], IntPoly]:
    """K~_{L,M}(t) by factoring Omega = P Lambda P^T (zeros omitted)."""
    from .core import double_dominance_le

    P, _ = solve_p_lambda(omega_matrix(n, 2), total_order(n), a_stat, double_dominance_le)
    return {k: v for k, v in P.items() if v}


@cache
def modified_kostka_table(n: int) -> dict[tuple[Partition, Partition], IntPoly]:
    """One-alphabet K~_{lam,mu}(t) = t^{n(mu)} K_{lam,mu}(1/t) by the same algorithm."""
    from .core import dominance_le

    P, _ = solve_p_lambda(omega_matrix(n, 1), partitions(n), n_stat, dominance_le)
    return {k: v for k, v in P.items() if v}


def induced_multiplicity(mu2: Partition, lam) -> int:
    """< Ind_{S_mu''}^{W_n} 1, chi^L >, by averaging chi^L over the Young subgroup."""
    mu2 = Partition(mu2)
    lam = _coerce_dp(lam)
    total = Fraction(0)
    for rhos in product(*(partitions(m) for m in mu2)):
        cyc = Partition(sorted((p for r in rhos for p in r), reverse=True))
        weight = Fraction(1, prod(z_int(r) for r in rhos))
        total += weight * wn_character(lam, DoublePartition(cyc, Partition()))
    if total.denominator != 1:
        raise ArithmeticError("non-integral multiplicity")
    return int(total)
