"""The Hall bimodule of enhanced nilpotent orbits, computed through symmetric functions.

Structure constants live on the symmetric-function side:

* ``R_N = P_{n'}(x1; t^2) P_{n''}(x2; t^2) = sum_M h^M_N(t) P_M``;
* ``g^M_N(t)`` is recovered from ``h^M_N(t) = t^{a(M)-a(N)} g^M_N(t^-2)``;
* ``H`` (left: multiply by ``P_a(x1; t^2)``, right: by ``P_a(x2; t^2)``)
  turns into the bimodule constants ``G`` via
  ``G(q^2) = q^{a(L)-a(M)-2n(a)} H(1/q)`` on the left and
  ``G(q^2) = q^{a(L)-a(M)-2n(a)-|a|} H(1/q)`` on the right (the extra
  ``|a|`` comes from the second alphabet carrying ``|mu''|`` inside ``a(M)``).

Bimodule elements are :class:`LinComb` objects keyed by double partitions
with :class:`IntPoly` coefficients in the Hall parameter.
"""
from __future__ import annotations

from functools import cache
from typing import Mapping

from .core import (
    DoublePartition,
    Partition,
    _coerce_dp,
    a_stat,
    double_partitions,
    n_stat,
    partitions,
)
from .double import double_kostka_matrix, gram_schmidt_hl, modified_double_kostka, modified_kostka
from .poly import IntPoly
from .symfunc import LinComb, f_poly, g_hall, hl_in_schur
from .tableaux import lr_coefficient

__all__ = [
    "h_transition",
    "h_inverse",
    "g_double",
    "H_left",
    "H_right",
    "H_left_via_h",
    "G_left",
    "G_right",
    "hall_product",
    "left_action",
    "right_action",
    "fv_basis",
    "psi_image",
    "psi_hall",
    "psi_hall_right",
    "psi",
    "xi_left_multiply",
    "xi_right_multiply",
    "check_kostka_from_hall",
]


# ---------------------------------------------------------------------------
# products inside the two-alphabet ring (Schur basis)

def xi_left_multiply(f: Mapping[Partition, IntPoly], v: Mapping[DoublePartition, IntPoly]) -> LinComb:
    """f(x1) * v for f in the one-alphabet Schur basis."""
    out = LinComb()
    for kappa, c in f.items():
        for lam, d in v.items():
            cd = c * d
            for eta in partitions(sum(kappa) + sum(lam.first)):
                lr = lr_coefficient(kappa, lam.first, eta)
                if lr:
                    out.add_term(DoublePartition(eta, lam.second), cd * lr)
    return out


def xi_right_multiply(v: Mapping[DoublePartition, IntPoly], f: Mapping[Partition, IntPoly]) -> LinComb:
    """v * f(x2)."""
    out = LinComb()
    for lam, d in v.items():
        for kappa, c in f.items():
            cd = c * d
            for eta in partitions(sum(kappa) + sum(lam.second)):
                lr = lr_coefficient(lam.second, kappa, eta)
                if lr:
                    out.add_term(DoublePartition(lam.first, eta), cd * lr)
    return out


def _to_p_basis(v: Mapping[DoublePartition, IntPoly]) -> LinComb:
    """Schur-basis vector -> P-basis, using s_L = sum K_{L,M} P_M."""
    out = LinComb()
    for lam, c in v.items():
        for (a, mu), k in double_kostka_matrix(lam.size).items():
            if a == lam:
                out.add_term(mu, c * k)
    return out


def _hl_sq(mu: Partition) -> LinComb:
    """P_mu(y; t^2) in the Schur basis."""
    return LinComb((k, c.subs_power(2)) for k, c in hl_in_schur(mu).items())


# ---------------------------------------------------------------------------
# h and g

@cache
def _h_columns(n: int) -> dict[DoublePartition, LinComb]:
    out = {}
    for nu in double_partitions(n):
        left = _hl_sq(nu.first)
        right = _hl_sq(nu.second)
        r = LinComb()
        for k1, c1 in left.items():
            for k2, c2 in right.items():
                r.add_term(DoublePartition(k1, k2), c1 * c2)
        out[nu] = _to_p_basis(r)
    return out


def h_transition(n: int) -> dict[tuple[DoublePartition, DoublePartition], IntPoly]:
    """h^M_N(t), keyed (M, N): R_N = sum_M h^M_N P_M."""
    return {(mu, nu): c for nu, col in _h_columns(n).items() for mu, c in col.items()}


@cache
def h_inverse(n: int) -> dict[tuple[DoublePartition, DoublePartition], IntPoly]:
    """h'_{M,N}(t), keyed (M, N): P_M = sum_N h'_{M,N} R_N."""
    cols = _h_columns(n)
    from .core import total_order

    inv: dict[DoublePartition, LinComb] = {}
    for mu in reversed(total_order(n)):  # smallest first; R_M = P_M + lower terms
        row = LinComb({mu: IntPoly(1)})
        for kappa, c in cols[mu].items():
            if kappa == mu:
                if c != 1:
                    raise ArithmeticError(f"h^{mu}_{mu} = {c}, expected 1")
                continue
            row = row - inv[kappa].scale(c)
        inv[mu] = row
    return {(mu, nu): c for mu, row in inv.items() for nu, c in row.items()}


def g_double(mu, nu) -> IntPoly:
    """g^M_N(t): number of x-stable W containing v with types (n', n'') for (x, v) in O_M."""
    mu, nu = _coerce_dp(mu), _coerce_dp(nu)
    if mu.size != nu.size:
        return IntPoly()
    h = h_transition(mu.size).get((mu, nu), IntPoly())
    # h(t) = t^{a(M)-a(N)} g(t^-2)  =>  g(t^-2) = t^{a(N)-a(M)} h(t)
    shifted = h.shift(a_stat(nu) - a_stat(mu))
    return _halve_negated(shifted, f"g^{mu}_{nu}")


def _halve_negated(p: IntPoly, what: str) -> IntPoly:
    """Given p(t) = g(t^-2), return g."""
    out = {}
    for e, c in p.coefficients.items():
        if e > 0 or e % 2:
            raise ArithmeticError(f"{what}: exponent {e} is not of the form -2k")
        out[-e // 2] = c
    return IntPoly(out)


def _halve(p: IntPoly, what: str) -> IntPoly:
    """Given p(q) = G(q^2) with only even nonnegative powers, return G."""
    out = {}
    for e, c in p.coefficients.items():
        if e < 0 or e % 2:
            raise ArithmeticError(f"{what}: exponent {e} violates evenness/polynomiality")
        out[e // 2] = c
    return IntPoly(out)


# ---------------------------------------------------------------------------
# H and G

@cache
def _H_left(alpha: Partition, mu: DoublePartition) -> LinComb:
    v = xi_left_multiply(_hl_sq(alpha), gram_schmidt_hl(mu.size)[mu])
    return _to_p_basis(v)


@cache
def _H_right(mu: DoublePartition, alpha: Partition) -> LinComb:
    v = xi_right_multiply(gram_schmidt_hl(mu.size)[mu], _hl_sq(alpha))
    return _to_p_basis(v)


def H_left(alpha, mu) -> dict[DoublePartition, IntPoly]:
    """P_a(x1; t^2) P_M(x; t) = sum_L H^L_{a,M}(t) P_L."""
    return dict(_H_left(Partition(alpha), _coerce_dp(mu)))


def H_right(mu, alpha) -> dict[DoublePartition, IntPoly]:
    """P_M(x; t) P_a(x2; t^2) = sum_L H^L_{M,a}(t) P_L."""
    return dict(_H_right(_coerce_dp(mu), Partition(alpha)))


def H_left_via_h(alpha, mu) -> dict[DoublePartition, IntPoly]:
    """H^L_{a,M} = sum_{N, xi} h'_{M,N}(t) f^xi_{a,n'}(t^2) h^L_{(xi;n'')}(t)."""
    alpha, mu = Partition(alpha), _coerce_dp(mu)
    n = sum(alpha) + mu.size
    hinv = h_inverse(mu.size)
    cols = _h_columns(n)
    out = LinComb()
    for (m, nu), c in hinv.items():
        if m != mu:
            continue
        for xi in partitions(sum(alpha) + sum(nu.first)):
            f = f_poly(alpha, nu.first, xi)
            if not f:
                continue
            coeff = c * f.subs_power(2)
            for lam, h in cols[DoublePartition(xi, nu.second)].items():
                out.add_term(lam, coeff * h)
    return dict(out)


def G_left(alpha, mu) -> dict[DoublePartition, IntPoly]:
    """G^L_{a,M}(t): structure constants of u_a . u_M."""
    alpha, mu = Partition(alpha), _coerce_dp(mu)
    out = {}
    for lam, h in H_left(alpha, mu).items():
        e = a_stat(lam) - a_stat(mu) - 2 * n_stat(alpha)
        out[lam] = _halve(h.invert_variable().shift(e), f"G^{lam}_({alpha},{mu})")
    return out


def G_right(mu, alpha) -> dict[DoublePartition, IntPoly]:
    """G^L_{M,a}(t): structure constants of u_M . u_a."""
    alpha, mu = Partition(alpha), _coerce_dp(mu)
    out = {}
    for lam, h in H_right(mu, alpha).items():
        # the right factor sits in the second alphabet, whose share of a(L)
        # carries the extra |a|; without it u_0 u_b = u_(-;b) fails
        e = a_stat(lam) - a_stat(mu) - 2 * n_stat(alpha) - sum(alpha)
        out[lam] = _halve(h.invert_variable().shift(e), f"G^{lam}_({mu},{alpha})")
    return out


# ---------------------------------------------------------------------------
# the bimodule

def hall_product(u: Mapping[Partition, IntPoly], v: Mapping[Partition, IntPoly]) -> LinComb:
    """Product in the Hall algebra: u_b u_c = sum g^a_{b,c}(t) u_a."""
    out = LinComb()
    for b, cb in u.items():
        for c, cc in v.items():
            for a in partitions(sum(b) + sum(c)):
                g = g_hall(b, c, a)
                if g:
                    out.add_term(a, cb * cc * g)
    return out


def left_action(alpha, m: Mapping[DoublePartition, IntPoly]) -> LinComb:
    """u_a . m  for a bimodule element m."""
    alpha = Partition(alpha)
    out = LinComb()
    for mu, c in m.items():
        for lam, g in G_left(alpha, mu).items():
            out.add_term(lam, c * g)
    return out


def right_action(m: Mapping[DoublePartition, IntPoly], alpha) -> LinComb:
    """m . u_a."""
    alpha = Partition(alpha)
    out = LinComb()
    for mu, c in m.items():
        for lam, g in G_right(mu, alpha).items():
            out.add_term(lam, c * g)
    return out


def act_left(h: Mapping[Partition, IntPoly], m: Mapping[DoublePartition, IntPoly]) -> LinComb:
    out = LinComb()
    for alpha, c in h.items():
        out = out + left_action(alpha, m).scale(c)
    return out


def act_right(m: Mapping[DoublePartition, IntPoly], h: Mapping[Partition, IntPoly]) -> LinComb:
    out = LinComb()
    for alpha, c in h.items():
        out = out + right_action(m, alpha).scale(c)
    return out


def fv_basis(mu) -> LinComb:
    """v_M = u_{m'} u_0 u_{m''}, expanded in the u basis."""
    mu = _coerce_dp(mu)
    u0 = LinComb({DoublePartition.of(): IntPoly(1)})
    return left_action(mu.first, right_action(u0, mu.second))


# ---------------------------------------------------------------------------
# the map to symmetric functions

def psi_image(lam) -> LinComb:
    """t^{-a(L)} P_L(x; 1/t) in the Schur basis (Laurent coefficients)."""
    lam = _coerce_dp(lam)
    shift = -a_stat(lam)
    return LinComb((k, c.invert_variable().shift(shift)) for k, c in gram_schmidt_hl(lam.size)[lam].items())


def psi(m: Mapping[DoublePartition, IntPoly]) -> LinComb:
    """Image of a bimodule element over Z[t^2] (coefficients given in t^2 -> substituted)."""
    out = LinComb()
    for lam, c in m.items():
        out = out + psi_image(lam).scale(c.subs_power(2))
    return out


def psi_hall(alpha) -> LinComb:
    """Image of u_a (parameter t^2): t^{-2n(a)} P_a(y; t^-2), in the Schur basis."""
    alpha = Partition(alpha)
    return LinComb((k, c.subs_power(-2).shift(-2 * n_stat(alpha))) for k, c in hl_in_schur(alpha).items())


def psi_hall_right(alpha) -> LinComb:
    """Factor by which u_a acts on the right after applying psi: t^{-2n(a)-|a|} P_a(y; t^-2)."""
    alpha = Partition(alpha)
    return psi_hall(alpha).map_coefficients(lambda c: c.shift(-sum(alpha)))


# ---------------------------------------------------------------------------
# modified double Kostka polynomials from Hall data and one-alphabet K~

def modified_kostka_from_hall(lam, mu) -> IntPoly:
    """t^{|l''|} sum_N g^M_N(t^2) K~_{l',n'}(t^2) K~_{l'',n''}(t^2)."""
    lam, mu = _coerce_dp(lam), _coerce_dp(mu)
    total = IntPoly()
    for nu in double_partitions(mu.size):
        if sum(nu.first) != sum(lam.first):
            continue
        g = g_double(mu, nu)
        if not g:
            continue
        k1 = modified_kostka(lam.first, nu.first)
        k2 = modified_kostka(lam.second, nu.second)
        if k1 and k2:
            total = total + g * k1 * k2
    return total.subs_power(2).shift(sum(lam.second))


def check_kostka_from_hall(n: int) -> list[str]:
    bad = []
    for lam in double_partitions(n):
        for mu in double_partitions(n):
            lhs = modified_double_kostka(lam, mu)
            rhs = modified_kostka_from_hall(lam, mu)
            if lhs != rhs:
                bad.append(f"K~[{lam},{mu}] = {lhs} but the Hall-side formula gives {rhs}")
    return bad
