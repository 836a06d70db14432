"""Symmetric functions in two alphabets x1, x2.

The ring is spanned by ``s_L = s_{l'}(x1) s_{l''}(x2)``.  It carries the
scalar product making the twisted power sums ``p_L`` orthogonal with
``<p_L, p_L> = z_L(t)``, where ``p^(1)_r = p_r(x1) + p_r(x2)`` and
``p^(2)_r = p_r(x1) - p_r(x2)``.  Applying Gram-Schmidt to the Schur basis
along any linear extension of dominance gives the functions ``P_L(x; t)``;
the coefficients of ``s_L`` in the ``P`` basis are the double Kostka
polynomials ``K_{L,M}(t)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import combinations, product
from math import lcm
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import (
    DoublePartition,
    Partition,
    _coerce_dp,
    a_stat,
    double_dominance_le,
    double_partitions,
    partitions,
    total_order,
    z_double_denominator,
    z_int,
)
from .poly import IntPoly, RatFn, poly_lcm
from .symfunc import LinComb, hl_in_schur, kostka_matrix, multiply_schur, f_poly, schur_to_power
from .tableaux import kostka_number, lr_coefficient

__all__ = [
    "XiVector",
    "s_to_p_double",
    "inner_product",
    "gram_schmidt_hl",
    "double_kostka_matrix",
    "modified_double_kostka",
    "modified_kostka",
    "check_monomial_split",
    "hl_double_in_schur",
    "check_empty_first_reduction",
    "check_empty_second_reduction",
    "specialize_diagonal_t1",
    "monomial_to_schur",
    "double_kostka_via_f",
    "double_kostka_via_lr",
    "double_kostka_via_hall",
]

XiVector = LinComb


def _dp(a: Iterable[int], b: Iterable[int]) -> DoublePartition:
    return DoublePartition(Partition(sorted(a, reverse=True)), Partition(sorted(b, reverse=True)))


# ---------------------------------------------------------------------------
# power sums

def _split_power(rho: Partition, sign: int) -> dict[DoublePartition, Fraction]:
    """Expand p_rho(x1) (sign=+1) or p_rho(x2) (sign=-1) in the twisted p basis."""
    out: dict[DoublePartition, Fraction] = {}
    parts = list(rho)
    scale = Fraction(1, 2 ** len(parts))
    for k in range(len(parts) + 1):
        for chosen in combinations(range(len(parts)), k):
            second = [parts[i] for i in chosen]
            first = [parts[i] for i in range(len(parts)) if i not in chosen]
            key = _dp(first, second)
            out[key] = out.get(key, 0) + scale * (sign**k)
    return {k: v for k, v in out.items() if v}


@cache
def s_to_p_double(lam: DoublePartition) -> dict[DoublePartition, Fraction]:
    """Coefficients of s_L in the twisted power-sum basis p_M."""
    lam = _coerce_dp(lam)
    out: dict[DoublePartition, Fraction] = {}
    for r1, c1 in schur_to_power(lam.first).items():
        e1 = _split_power(r1, 1)
        for r2, c2 in schur_to_power(lam.second).items():
            e2 = _split_power(r2, -1)
            for (a, b), (x, y) in product(e1.items(), e2.items()):
                key = _dp((*a.first, *x.first), (*a.second, *x.second))
                out[key] = out.get(key, 0) + c1 * c2 * b * y
    return {k: v for k, v in out.items() if v}


def _z_numerator(lam: DoublePartition) -> int:
    return 2 ** (len(lam.first) + len(lam.second)) * z_int(lam.first) * z_int(lam.second)


@cache
def _gram(n: int) -> tuple[dict[tuple[DoublePartition, DoublePartition], IntPoly], RatFn]:
    """Scaled Gram matrix of the Schur basis: <s_L, s_M> = Gt[L, M] / scale."""
    basis = double_partitions(n)
    idx = {b: i for i, b in enumerate(basis)}
    rows = [s_to_p_double(b) for b in basis]
    dA = lcm(*(c.denominator for r in rows for c in r.values()), 1)
    A = np.zeros((len(basis), len(basis)), dtype=object)
    A[:] = 0
    for i, r in enumerate(rows):
        for key, c in r.items():
            A[i, idx[key]] = int(c * dA)
    dens = [z_double_denominator(b) for b in basis]
    L = poly_lcm(dens)
    weights = [L.exact_div(d) * _z_numerator(b) for d, b in zip(dens, basis)]
    top = max(w.degree for w in weights)
    coeffs = []
    for k in range(top + 1):
        w = np.array([wt.coeff(k) for wt in weights], dtype=object)
        coeffs.append((A * w) @ A.T)
    G = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            G[a, b] = IntPoly([int(M[i, j]) for M in coeffs])
    return G, RatFn(L * (dA * dA))


def inner_product(u: Mapping[DoublePartition, object], v: Mapping[DoublePartition, object]) -> RatFn:
    """<u, v> for vectors in the Schur basis (homogeneous pieces only pair within a degree)."""
    total = RatFn()
    by_deg: dict[int, RatFn] = {}
    for a, ca in u.items():
        a = _coerce_dp(a)
        G, scale = _gram(a.size)
        for b, cb in v.items():
            b = _coerce_dp(b)
            if b.size != a.size:
                continue
            g = G[a, b]
            if g:
                by_deg[a.size] = by_deg.get(a.size, RatFn()) + RatFn._coerce(ca) * RatFn._coerce(cb) * g
    for deg, val in by_deg.items():
        total = total + val / _gram(deg)[1]
    return total


# ---------------------------------------------------------------------------
# Gram-Schmidt

def _check_linear_extension(order: Sequence[DoublePartition], n: int) -> tuple[DoublePartition, ...]:
    order = tuple(_coerce_dp(x) for x in order)
    if sorted(order) != sorted(double_partitions(n)) or len(set(order)) != len(order):
        raise ValueError(f"order must list every double partition of {n} exactly once")
    pos = {x: i for i, x in enumerate(order)}
    for a in order:
        for b in order:
            if a != b and double_dominance_le(a, b) and pos[b] > pos[a]:
                raise ValueError(f"order is not a linear extension of dominance: {b} must precede {a}")
    return order


@cache
def _gram_schmidt(order: tuple[DoublePartition, ...]):
    n = order[0].size
    G, _ = _gram(n)
    U: dict[DoublePartition, dict[DoublePartition, IntPoly]] = {}
    norm: dict[DoublePartition, IntPoly] = {}
    K: dict[tuple[DoublePartition, DoublePartition], IntPoly] = {}
    done: list[DoublePartition] = []
    for lam in reversed(order):  # smallest first
        row: dict[DoublePartition, IntPoly] = {lam: IntPoly(1)}
        for mu in done:
            num = IntPoly()
            for nu, c in U[mu].items():
                num = num + c * G[lam, nu]
            if not num:
                continue
            try:
                k = num.exact_div(norm[mu])
            except ArithmeticError:
                raise ArithmeticError(
                    f"Gram-Schmidt coefficient of P_{mu} in s_{lam} is not in Z[t]"
                ) from None
            K[lam, mu] = k
            for nu, c in U[mu].items():
                new = row.get(nu, IntPoly()) - k * c
                if new:
                    row[nu] = new
                else:
                    row.pop(nu, None)
        U[lam] = row
        nrm = IntPoly()
        for nu, c in row.items():
            nrm = nrm + c * G[lam, nu]
        norm[lam] = nrm
        K[lam, lam] = IntPoly(1)
        done.append(lam)
    return U, K


def gram_schmidt_hl(n: int, order: Sequence[DoublePartition] | None = None) -> dict[DoublePartition, XiVector]:
    """P_L for |L| = n, each expanded in the Schur basis (coefficients in Z[t]).

    ``order`` lists the double partitions largest first and must be a linear
    extension of dominance; the result does not depend on which one.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return {DoublePartition.of(): XiVector({DoublePartition.of(): IntPoly(1)})}
    order = total_order(n) if order is None else _check_linear_extension(order, n)
    U, _ = _gram_schmidt(tuple(order))
    return {lam: XiVector(U[lam]) for lam in order}


def double_kostka_matrix(
    n: int, order: Sequence[DoublePartition] | None = None
) -> dict[tuple[DoublePartition, DoublePartition], IntPoly]:
    """K_{L,M}(t) with s_L = sum_M K_{L,M} P_M; zero entries omitted."""
    if n == 0:
        e = DoublePartition.of()
        return {(e, e): IntPoly(1)}
    order = total_order(n) if order is None else _check_linear_extension(order, n)
    _, K = _gram_schmidt(tuple(order))
    return {k: v for k, v in K.items() if v}


def hl_double_in_schur(lam) -> XiVector:
    lam = _coerce_dp(lam)
    return gram_schmidt_hl(lam.size)[lam]


def modified_double_kostka(lam, mu) -> IntPoly:
    """K~_{L,M}(t) = t^{a(M)} K_{L,M}(1/t)."""
    lam, mu = _coerce_dp(lam), _coerce_dp(mu)
    k = double_kostka_matrix(lam.size).get((lam, mu), IntPoly())
    return k.invert_variable().shift(a_stat(mu))


def modified_kostka(lam: Partition, mu: Partition) -> IntPoly:
    """One-alphabet K~_{lam,mu}(t) = t^{n(mu)} K_{lam,mu}(1/t)."""
    from .core import n_stat

    k = kostka_matrix(sum(lam)).get((Partition(lam), Partition(mu)), IntPoly())
    return k.invert_variable().shift(n_stat(mu))


# ---------------------------------------------------------------------------
# reductions to one alphabet

def _hl_substituted(mu: Partition, power: int) -> LinComb:
    """P_mu(y; t^power) in the Schur basis."""
    return LinComb((lam, c.subs_power(power)) for lam, c in hl_in_schur(mu).items())


def check_empty_first_reduction(n: int) -> list[str]:
    """Compare K_{(-;l''),(-;m'')}(t) with K_{l'',m''}(t^2) and P_{(-;l'')} with P_{l''}(x2; t^2).

    Returns a list of mismatch descriptions (empty when everything agrees).
    """
    bad: list[str] = []
    K = double_kostka_matrix(n)
    one = kostka_matrix(n)
    P = gram_schmidt_hl(n)
    e = Partition()
    for lam in partitions(n):
        for mu in partitions(n):
            lhs = K.get((DoublePartition(e, lam), DoublePartition(e, mu)), IntPoly())
            rhs = one.get((lam, mu), IntPoly()).subs_power(2)
            if lhs != rhs:
                bad.append(f"K[.{lam}, .{mu}] = {lhs} but K_{lam},{mu}(t^2) = {rhs}")
        expect = LinComb((DoublePartition(e, k), c) for k, c in _hl_substituted(lam, 2).items())
        if P[DoublePartition(e, lam)] != expect:
            bad.append(f"P_(-;{lam}) differs from P_{lam}(x2; t^2)")
    return bad


def check_empty_second_reduction(n: int) -> list[str]:
    """Compare K~_{(l';-),M}(t) with K~_{l', m'+m''}(t^2), and expand P_nu(x1; t^2)."""
    bad: list[str] = []
    e = Partition()
    P = gram_schmidt_hl(n)
    for lam in partitions(n):
        for mu in double_partitions(n):
            lhs = modified_double_kostka(DoublePartition(lam, e), mu)
            rhs = modified_kostka(lam, mu.first + mu.second).subs_power(2)
            if lhs != rhs:
                bad.append(f"K~[{lam}., {mu}] = {lhs} but expected {rhs}")
    for nu in partitions(n):
        lhs = LinComb((DoublePartition(k, e), c) for k, c in _hl_substituted(nu, 2).items())
        rhs = LinComb()
        for mu in double_partitions(n):
            if mu.first + mu.second == nu:
                rhs = rhs + P[mu].scale(IntPoly.monomial(sum(mu.second)))
        if lhs != rhs:
            bad.append(f"P_{nu}(x1; t^2) differs from sum of t^|m''| P_M")
    return bad


# ---------------------------------------------------------------------------
# specialisations at t = 1

def _at_one(c) -> Fraction:
    return RatFn._coerce(c)(1)


def specialize_diagonal_t1(mu) -> dict[Partition, Fraction]:
    """P_M(x; 1) with x1 = x2 = y, in the monomial basis of y."""
    mu = _coerce_dp(mu)
    schur = LinComb()
    for lam, c in hl_double_in_schur(mu).items():
        v = _at_one(c)
        if v:
            prod_ = multiply_schur({lam.first: 1}, {lam.second: 1})
            schur = schur + prod_.scale(v)
    out = LinComb()
    for lam, c in schur.items():
        for nu in partitions(sum(lam)):
            k = kostka_number(lam, nu)
            if k:
                out.add_term(nu, c * k)
    return dict(out)


@cache
def _inverse_kostka_numbers(n: int) -> dict[tuple[Partition, Partition], Fraction]:
    """(K(1)^{-1})_{nu,lam}: m_nu = sum_lam M[nu, lam] s_lam."""
    order = partitions(n)
    inv: dict[tuple[Partition, Partition], Fraction] = {}
    # s_lam = sum_{mu<=lam} K_{lam mu} m_mu with K unitriangular; invert smallest first
    for i in range(len(order) - 1, -1, -1):
        nu = order[i]
        row = {nu: Fraction(1)}
        for j in range(i + 1, len(order)):
            mu = order[j]
            k = kostka_number(nu, mu)
            if k:
                for lam, c in _row(inv, order, mu).items():
                    row[lam] = row.get(lam, 0) - k * c
        # row currently expresses m_nu = s_nu - sum K m_mu
        for lam, c in row.items():
            if c:
                inv[nu, lam] = c
    return inv


def _row(inv, order, mu):
    return {lam: c for (a, lam), c in inv.items() if a == mu}


def monomial_to_schur(nu: Partition) -> dict[Partition, Fraction]:
    nu = Partition(nu)
    return {lam: c for (a, lam), c in _inverse_kostka_numbers(sum(nu)).items() if a == nu}


def check_monomial_split(n: int) -> list[str]:
    """m_nu(x1) = m_nu(x2) + sum_{nu = m'+m'', m' nonempty} P_M(x; 1), compared in the Schur basis."""
    bad = []
    e = Partition()
    P = gram_schmidt_hl(n)
    for nu in partitions(n):
        m = monomial_to_schur(nu)
        lhs = LinComb((DoublePartition(lam, e), c) for lam, c in m.items())
        rhs = LinComb((DoublePartition(e, lam), c) for lam, c in m.items())
        for mu in double_partitions(n):
            if mu.first and mu.first + mu.second == nu:
                rhs = rhs + LinComb((k, _at_one(c)) for k, c in P[mu].items())
        if lhs != rhs:
            bad.append(f"monomial splitting fails for {nu}")
    return bad


# ---------------------------------------------------------------------------
# columns (-; m'') through one-alphabet data

def _hall_f(a, b, c) -> IntPoly:
    return f_poly(a, b, c)


def double_kostka_via_f(lam, mu2: Partition) -> IntPoly:
    """t^{|l'|} sum_{nu', nu''} f^{m''}_{nu',nu''}(t^2) K_{l',nu'}(t^2) K_{l'',nu''}(t^2)."""
    lam = _coerce_dp(lam)
    mu2 = Partition(mu2)
    n1, n2 = sum(lam.first), sum(lam.second)
    K1, K2 = kostka_matrix(n1), kostka_matrix(n2)
    total = IntPoly()
    for nu1 in partitions(n1):
        k1 = K1.get((lam.first, nu1))
        if not k1:
            continue
        for nu2 in partitions(n2):
            k2 = K2.get((lam.second, nu2))
            if not k2:
                continue
            f = f_poly(nu1, nu2, mu2)
            if f:
                total = total + f * k1 * k2
    return total.subs_power(2).shift(n1)


def double_kostka_via_lr(lam, mu2: Partition) -> IntPoly:
    """t^{|l'|} sum_eta c^eta_{l',l''} K_{eta,m''}(t^2)."""
    lam = _coerce_dp(lam)
    mu2 = Partition(mu2)
    K = kostka_matrix(sum(mu2))
    total = IntPoly()
    for eta in partitions(sum(mu2)):
        c = lr_coefficient(lam.first, lam.second, eta)
        if c:
            total = total + K.get((eta, mu2), IntPoly()) * c
    return total.subs_power(2).shift(sum(lam.first))


def double_kostka_via_hall(lam, mu2: Partition) -> IntPoly:
    """K_{L,(-;m'')}(t) from one-alphabet data; both routes must agree."""
    a = double_kostka_via_f(lam, mu2)
    b = double_kostka_via_lr(lam, mu2)
    if a != b:
        raise ArithmeticError(f"f-route {a} and LR-route {b} disagree for {lam}, {mu2}")
    return a
