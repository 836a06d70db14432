"""Symmetric functions in one alphabet: characters, Hall-Littlewood P in the
Schur basis, and the Hall polynomials f and g.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Callable, Iterable, Mapping

from .core import Partition, partitions, z_int, n_stat
from .poly import IntPoly
from .tableaux import kostka_charge, lr_coefficient

__all__ = [
    "LinComb",
    "sn_character",
    "schur_to_power",
    "kostka_matrix",
    "hl_in_schur",
    "multiply_schur",
    "schur_to_hl",
    "f_poly",
    "g_hall",
]


class LinComb(dict):
    """A finite linear combination: basis key -> nonzero coefficient.

    Coefficients can be anything supporting + and * (ints, Fractions,
    IntPoly, RatFn).  Zero coefficients are dropped eagerly.
    """

    def __init__(self, data: Mapping | Iterable = ()):
        super().__init__()
        items = data.items() if isinstance(data, Mapping) else data
        for k, v in items:
            self.add_term(k, v)

    def add_term(self, key, coeff) -> None:
        if not coeff:
            return
        if key in self:
            new = self[key] + coeff
            if new:
                self[key] = new
            else:
                del self[key]
        else:
            self[key] = coeff

    def __add__(self, other: Mapping) -> LinComb:
        out = LinComb(self)
        for k, v in other.items():
            out.add_term(k, v)
        return out

    def __sub__(self, other: Mapping) -> LinComb:
        out = LinComb(self)
        for k, v in other.items():
            out.add_term(k, -v)
        return out

    def __neg__(self) -> LinComb:
        return LinComb((k, -v) for k, v in self.items())

    def scale(self, c) -> LinComb:
        return LinComb((k, c * v) for k, v in self.items())

    def map_coefficients(self, fn: Callable) -> LinComb:
        return LinComb((k, fn(v)) for k, v in self.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mapping):
            return NotImplemented
        keys = set(self) | set(other)
        return all(self.get(k, 0) == other.get(k, 0) for k in keys)

    __hash__ = None  # mutable


SchurVector = LinComb


# ---------------------------------------------------------------------------
# characters of the symmetric group

@cache
def sn_character(lam: Partition, rho: Partition) -> int:
    """chi^lam(rho) via Murnaghan-Nakayama on beta-sets."""
    lam, rho = Partition(lam), Partition(rho)
    if sum(lam) != sum(rho):
        raise ValueError("character needs |lam| = |rho|")
    if not rho:
        return 1
    r, rest = rho[0], Partition(rho[1:])
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and b - r not in beads:
            sign = -1 if sum(1 for x in beads if b - r < x < b) % 2 else 1
            new = sorted((beads - {b}) | {b - r}, reverse=True)
            mu = Partition(x - (ell - 1 - i) for i, x in enumerate(new))
            total += sign * sn_character(mu, rest)
    return total


@cache
def schur_to_power(lam: Partition) -> dict[Partition, Fraction]:
    """s_lam = sum_rho chi^lam(rho)/z_rho p_rho."""
    lam = Partition(lam)
    out = {}
    for rho in partitions(sum(lam)):
        c = sn_character(lam, rho)
        if c:
            out[rho] = Fraction(c, z_int(rho))
    return out


# ---------------------------------------------------------------------------
# Hall-Littlewood P

@cache
def kostka_matrix(n: int) -> dict[tuple[Partition, Partition], IntPoly]:
    """K_{lam,mu}(t) for |lam| = |mu| = n (charge formula), zeros omitted."""
    out = {}
    for lam in partitions(n):
        for mu in partitions(n):
            k = kostka_charge(lam, mu)
            if k:
                out[lam, mu] = k
    return out


@cache
def hl_in_schur(mu: Partition) -> LinComb:
    """P_mu(t) = sum_lam w_{mu,lam}(t) s_lam, w the inverse of the Kostka-Foulkes matrix."""
    mu = Partition(mu)
    n = sum(mu)
    K = kostka_matrix(n)
    order = partitions(n)  # reverse lex, so everything mu dominates comes later
    # from s_mu = sum_{nu <= mu} K_{mu,nu} P_nu
    idx = order.index(mu)
    out = LinComb({mu: IntPoly(1)})
    for nu in order[idx + 1:]:
        k = K.get((mu, nu))
        if k:
            out = out - hl_in_schur(nu).scale(k)
    return out


def multiply_schur(u: Mapping[Partition, object], v: Mapping[Partition, object]) -> LinComb:
    """Product in the Schur basis using Littlewood-Richardson coefficients."""
    out = LinComb()
    for a, ca in u.items():
        for b, cb in v.items():
            c = ca * cb
            for nu in partitions(sum(a) + sum(b)):
                lr = lr_coefficient(a, b, nu)
                if lr:
                    out.add_term(nu, c * lr)
    return out


def schur_to_hl(v: Mapping[Partition, object]) -> LinComb:
    """Re-expand a Schur-basis vector in the P basis: s_lam = sum K_{lam,mu} P_mu."""
    out = LinComb()
    for lam, c in v.items():
        for (a, mu), k in kostka_matrix(sum(lam)).items():
            if a == lam:
                out.add_term(mu, c * k)
    return out


@cache
def _hl_product(mu: Partition, nu: Partition) -> LinComb:
    return schur_to_hl(multiply_schur(hl_in_schur(mu), hl_in_schur(nu)))


def f_poly(mu: Partition, nu: Partition, lam: Partition) -> IntPoly:
    """Structure constant f^lam_{mu,nu}(t) of P_mu P_nu = sum f P_lam."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if sum(mu) + sum(nu) != sum(lam):
        return IntPoly()
    return _hl_product(mu, nu).get(lam, IntPoly())


def g_hall(mu: Partition, nu: Partition, lam: Partition) -> IntPoly:
    """Hall polynomial g^lam_{mu,nu}(t) = t^{n(lam)-n(mu)-n(nu)} f^lam_{mu,nu}(1/t)."""
    f = f_poly(mu, nu, lam)
    g = f.invert_variable().shift(n_stat(lam) - n_stat(mu) - n_stat(nu))
    if not g.is_polynomial():
        raise ArithmeticError(f"Hall polynomial g^{lam}_{mu},{nu} has negative powers: {g}")
    return g
