"""Verification suites: each returns a list of :class:`Check` results.

The suites compare independent routes to the same numbers (Gram-Schmidt,
the fake-degree solver, charge, one-alphabet formulas, finite-field counts)
and test the structural identities the polynomials are known to satisfy.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Iterable

from .core import (
    DoublePartition,
    Partition,
    a_stat,
    c_sequence,
    double_dominance_le,
    double_partitions,
    format_double_partition,
    parse_double_partition,
    partitions,
    total_order,
)
from .double import (
    check_empty_first_reduction,
    check_empty_second_reduction,
    check_monomial_split,
    double_kostka_matrix,
    double_kostka_via_f,
    double_kostka_via_lr,
    gram_schmidt_hl,
    modified_double_kostka,
    specialize_diagonal_t1,
)
from .poly import IntPoly, parse_poly
from .symfunc import LinComb
from .tableaux import double_kostka_charge

__all__ = ["Check", "SUITES", "run_suite", "golden_table", "GOLDEN_SIZES", "alternate_order"]

GOLDEN_SIZES = (2, 3, 4, 5)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    failures: list[str] = field(default_factory=list)


def _check(name: str, failures: Iterable[str], limit: int = 5) -> Check:
    failures = list(failures)
    detail = "; ".join(failures[:limit]) + (f" (+{len(failures) - limit} more)" if len(failures) > limit else "")
    return Check(name, not failures, detail, failures)


def _guard(name: str, fn: Callable[[], Iterable[str]]) -> Check:
    try:
        return _check(name, fn())
    except ArithmeticError as exc:
        return Check(name, False, f"{type(exc).__name__}: {exc}", [str(exc)])


def _key(lam, mu) -> str:
    return f"{format_double_partition(lam)}|{format_double_partition(mu)}"


# ---------------------------------------------------------------------------
# golden tables

def golden_table(n: int) -> dict:
    """The stored reference table for n in 2..5 as {"n", "order", "entries"}."""
    if n not in GOLDEN_SIZES:
        raise KeyError(f"no stored table for n={n}")
    text = resources.files("dkostka").joinpath("data").joinpath(f"table_n{n}.json").read_text(encoding="utf-8")
    return json.loads(text)


def golden_failures(n: int) -> list[str]:
    table = golden_table(n)
    labels = [parse_double_partition(s) for s in table["order"]]
    if sorted(labels) != sorted(double_partitions(n)):
        return [f"stored labels for n={n} are not the double partitions of {n}"]
    K = double_kostka_matrix(n)
    bad = []
    for lam in labels:
        for mu in labels:
            want = parse_poly(table["entries"].get(_key(lam, mu), ""))
            got = K.get((lam, mu), IntPoly())
            if want != got:
                bad.append(f"K[{_key(lam, mu)}]: computed {got}, table {want}")
    return bad


def _n1_failures() -> list[str]:
    K = double_kostka_matrix(1)
    one, bar = DoublePartition.of((1,), ()), DoublePartition.of((), (1,))
    want = {(one, one): IntPoly(1), (bar, bar): IntPoly(1), (one, bar): IntPoly.monomial(1)}
    return [] if K == want else [f"n=1 matrix is {K}"]


def suite_golden(n: int, **_) -> list[Check]:
    """Every stored table of size at most n, plus the n = 1 matrix."""
    out = []
    if n >= 1:
        out.append(_guard("n=1 matrix [[1, t], [0, 1]]", _n1_failures))
    for m in range(2, n + 1):
        if m in GOLDEN_SIZES:
            out.append(_guard(f"golden table n={m} ({len(double_partitions(m)) ** 2} entries)", lambda m=m: golden_failures(m)))
    return out


# ---------------------------------------------------------------------------
# cross-algorithm agreement

def _ls_failures(n: int) -> list[str]:
    from .fake_degrees import modified_double_kostka_table

    ls = modified_double_kostka_table(n)
    bad = []
    for lam in double_partitions(n):
        for mu in double_partitions(n):
            tilde = ls.get((lam, mu), IntPoly())
            k = tilde.invert_variable().shift(a_stat(mu))  # K = t^{a(M)} K~(1/t)
            want = double_kostka_matrix(n).get((lam, mu), IntPoly())
            if k != want:
                bad.append(f"K[{_key(lam, mu)}]: Gram-Schmidt {want}, fake-degree solver {k}")
    return bad


def _column_failures(n: int) -> list[str]:
    K = double_kostka_matrix(n)
    bad = []
    e = Partition()
    for lam in double_partitions(n):
        for mu2 in partitions(n):
            want = K.get((lam, DoublePartition(e, mu2)), IntPoly())
            routes = {
                "charge": double_kostka_charge(lam, mu2),
                "f-sum": double_kostka_via_f(lam, mu2),
                "LR-sum": double_kostka_via_lr(lam, mu2),
            }
            for name, val in routes.items():
                if val != want:
                    bad.append(f"K[{lam},.{mu2}]: Gram-Schmidt {want}, {name} {val}")
    return bad


def _character_failures(n: int) -> list[str]:
    from .fake_degrees import induced_multiplicity

    K = double_kostka_matrix(n)
    bad = []
    for mu2 in partitions(n):
        for lam in double_partitions(n):
            m = induced_multiplicity(mu2, lam)
            k = K.get((lam, DoublePartition(Partition(), mu2)), IntPoly())(1)
            if m != k:
                bad.append(f"<Ind 1, chi^{lam}> for S_{mu2}: {m} but K(1) = {k}")
    return bad


def induced_trivial_decomposition() -> list[str]:
    """Ind_{S_2}^{W_2} 1 = chi^(-;2) + chi^(1;1) + chi^(2;-)."""
    from .fake_degrees import induced_multiplicity

    want = {
        DoublePartition.of((), (2,)): 1,
        DoublePartition.of((1,), (1,)): 1,
        DoublePartition.of((2,), ()): 1,
    }
    got = {lam: induced_multiplicity((2,), lam) for lam in double_partitions(2)}
    got = {k: v for k, v in got.items() if v}
    return [] if got == want else [f"decomposition {got}"]


def suite_crossalg(n: int, **_) -> list[Check]:
    out = []
    for m in range(1, n + 1):
        out.append(_guard(f"Gram-Schmidt vs fake-degree solver n={m}", lambda m=m: _ls_failures(m)))
        out.append(_guard(f"(-;m'') columns: charge, f-sum, LR-sum n={m}", lambda m=m: _column_failures(m)))
    return out


def suite_characters(n: int, **_) -> list[Check]:
    out = [_guard(f"induced multiplicities vs K(1) n={m}", lambda m=m: _character_failures(m)) for m in range(1, n + 1)]
    if n >= 2:
        out.append(_guard("Ind from S_2 to W_2 has three constituents", induced_trivial_decomposition))
    return out


# ---------------------------------------------------------------------------
# structure and reductions

def structure_failures(n: int) -> list[str]:
    K = double_kostka_matrix(n)
    bad = []
    for lam in double_partitions(n):
        for mu in double_partitions(n):
            k = K.get((lam, mu), IntPoly())
            below = double_dominance_le(mu, lam)
            if not below:
                if k:
                    bad.append(f"K[{_key(lam, mu)}] = {k} but M is not below L")
                continue
            if not k.is_nonnegative() or not k.is_polynomial():
                bad.append(f"K[{_key(lam, mu)}] = {k} not in Z>=0[t]")
            if not k or k.leading != 1 or k.degree != a_stat(mu) - a_stat(lam):
                bad.append(f"K[{_key(lam, mu)}] = {k} not monic of degree {a_stat(mu) - a_stat(lam)}")
            kt = modified_double_kostka(lam, mu)
            if any((e - a_stat(lam)) % 2 for e in kt.coefficients):
                bad.append(f"K~[{_key(lam, mu)}] = {kt} has powers of the wrong parity")
            if not kt.is_nonnegative() or not kt.is_polynomial():
                bad.append(f"K~[{_key(lam, mu)}] = {kt} not in Z>=0[t]")
    return bad


def suite_structure(n: int, **_) -> list[Check]:
    return [_guard(f"positivity, triangularity, degrees, parity n={m}", lambda m=m: structure_failures(m)) for m in range(1, n + 1)]


def suite_reductions(n: int, **_) -> list[Check]:
    out = []
    for m in range(1, n + 1):
        out.append(_guard(f"empty first component reduces to K(t^2) n={m}", lambda m=m: check_empty_first_reduction(m)))
        out.append(_guard(f"empty second component reduces to K~(t^2) n={m}", lambda m=m: check_empty_second_reduction(m)))
    return out


def diagonal_failures(n: int) -> list[str]:
    bad = []
    for mu in double_partitions(n):
        got = {k: v for k, v in specialize_diagonal_t1(mu).items() if v}
        want = {mu.second: 1} if not mu.first else {}
        if got != want:
            bad.append(f"P_{mu}(y,y;1) = {got}, expected {want}")
    return bad


def suite_specialize(n: int, **_) -> list[Check]:
    out = [_guard(f"P_M(x;1) at x1=x2 n={m}", lambda m=m: diagonal_failures(m)) for m in range(1, n + 1)]
    out += [_guard(f"m(x1) = m(x2) + sum P_M(x;1) n={m}", lambda m=m: check_monomial_split(m)) for m in range(1, min(n, 4) + 1)]
    return out


# ---------------------------------------------------------------------------
# order independence

def alternate_order(n: int) -> tuple[DoublePartition, ...]:
    """A second linear extension: sort by a(L), ties by |l''| descending then c ascending."""
    return tuple(sorted(double_partitions(n), key=lambda x: (a_stat(x), -sum(x.second), c_sequence(x, n))))


def order_failures(n: int) -> list[str]:
    alt = alternate_order(n)
    bad = []
    if alt == total_order(n) and n >= 2:
        bad.append("alternate order coincides with the default one")
    P1, P2 = gram_schmidt_hl(n), gram_schmidt_hl(n, order=alt)
    for lam in double_partitions(n):
        if P1[lam] != P2[lam]:
            bad.append(f"P_{lam} depends on the order")
    if double_kostka_matrix(n) != double_kostka_matrix(n, order=alt):
        bad.append("K matrix depends on the order")
    return bad


def suite_order(n: int, **_) -> list[Check]:
    return [_guard(f"second linear extension gives the same P and K n={m}", lambda m=m: order_failures(m)) for m in range(1, n + 1)]


# ---------------------------------------------------------------------------
# bimodule

def _g_unitriangular(n: int) -> list[str]:
    from .hall import g_double

    bad = []
    for lam in double_partitions(n):
        for mu in double_partitions(n):
            g = g_double(lam, mu)
            if lam == mu and g != 1:
                bad.append(f"g^{lam}_{lam} = {g}")
            elif lam != mu and g and not double_dominance_le(lam, mu):
                bad.append(f"g^{lam}_{mu} = {g} although {lam} is not below {mu}")
    return bad


def _triples(total: int):
    for s in range(total + 1):
        for k in range(s + 1):
            for alpha in partitions(k):
                for mu in double_partitions(s - k):
                    yield alpha, mu


def _G_parity(total: int) -> list[str]:
    from .hall import G_left, G_right

    bad = []
    for alpha, mu in _triples(total):
        for fn, side in ((lambda: G_left(alpha, mu), "left"), (lambda: G_right(mu, alpha), "right")):
            try:
                vals = fn()
            except ArithmeticError as exc:
                bad.append(f"{side}: {exc}")
                continue
            for lam, g in vals.items():
                if not g.is_polynomial():
                    bad.append(f"{side} G^{lam} for ({alpha},{mu}) = {g}")
    return bad


def _unit(key) -> LinComb:
    return LinComb({key: IntPoly(1)})


def _associativity(total: int) -> list[str]:
    from .hall import act_left, act_right, hall_product, left_action, right_action

    bad = []
    for s in range(total + 1):
        for b in range(s + 1):
            for c in range(s - b + 1):
                for beta in partitions(b):
                    for gamma in partitions(c):
                        prod = hall_product(_unit(beta), _unit(gamma))
                        for mu in double_partitions(s - b - c):
                            um = _unit(mu)
                            if act_left(prod, um) != left_action(beta, left_action(gamma, um)):
                                bad.append(f"(u_{beta} u_{gamma}) u_{mu} != u_{beta} (u_{gamma} u_{mu})")
                            if act_right(um, prod) != right_action(right_action(um, beta), gamma):
                                bad.append(f"u_{mu} (u_{beta} u_{gamma}) != (u_{mu} u_{beta}) u_{gamma}")
                            if right_action(left_action(beta, um), gamma) != left_action(beta, right_action(um, gamma)):
                                bad.append(f"(u_{beta} u_{mu}) u_{gamma} != u_{beta} (u_{mu} u_{gamma})")
    return bad


def _fv_failures(n: int) -> list[str]:
    from .hall import fv_basis, g_double, left_action

    bad = []
    u0 = _unit(DoublePartition.of())
    for beta in partitions(n):
        if left_action(Partition(), u0) != u0:
            bad.append("u_(empty) does not act as the identity")
        from .hall import right_action

        if right_action(u0, beta) != _unit(DoublePartition(Partition(), beta)):
            bad.append(f"u_0 u_{beta} != u_(-;{beta})")
    for mu in double_partitions(n):
        want = LinComb((lam, g_double(lam, mu)) for lam in double_partitions(n))
        if fv_basis(mu) != want:
            bad.append(f"v_{mu} does not expand with coefficients g^L_M")
    return bad


def _psi_failures(total: int) -> list[str]:
    from .hall import (
        G_left,
        G_right,
        psi_hall,
        psi_hall_right,
        psi_image,
        xi_left_multiply,
        xi_right_multiply,
    )

    bad = []
    for alpha, mu in _triples(total):
        lhs = LinComb()
        for lam, g in G_left(alpha, mu).items():
            lhs = lhs + psi_image(lam).scale(g.subs_power(2))
        if lhs != xi_left_multiply(psi_hall(alpha), psi_image(mu)):
            bad.append(f"psi(u_{alpha} u_{mu}) mismatch")
        rhs = LinComb()
        for lam, g in G_right(mu, alpha).items():
            rhs = rhs + psi_image(lam).scale(g.subs_power(2))
        if rhs != xi_right_multiply(psi_image(mu), psi_hall_right(alpha)):
            bad.append(f"psi(u_{mu} u_{alpha}) mismatch")
    return bad


def _h_route_failures(total: int) -> list[str]:
    from .hall import H_left, H_left_via_h

    return [
        f"H^L_({alpha},{mu}) differs between direct product and h'-f-h route"
        for alpha, mu in _triples(total)
        if H_left(alpha, mu) != H_left_via_h(alpha, mu)
    ]


def suite_bimodule(n: int, hall_formula_max: int = 3, **_) -> list[Check]:
    from .hall import check_kostka_from_hall

    out = []
    for m in range(1, n + 1):
        out.append(_guard(f"g^L_M unitriangular n={m}", lambda m=m: _g_unitriangular(m)))
    if n >= 1:
        out.append(_guard(f"G parity and polynomiality, total size <= {n}", lambda: _G_parity(n)))
        out.append(_guard(f"bimodule associativity, total size <= {n}", lambda: _associativity(n)))
        out.append(_guard(f"H via h', f, h agrees with direct product, total size <= {n}", lambda: _h_route_failures(n)))
        out.append(_guard(f"psi intertwines both actions, total size <= {n}", lambda: _psi_failures(n)))
    for m in range(1, n + 1):
        out.append(_guard(f"u_0 identities and v_M expansion n={m}", lambda m=m: _fv_failures(m)))
    for m in range(1, min(n, hall_formula_max) + 1):
        out.append(_guard(f"K~ from Hall data (g, K~ K~) n={m}", lambda m=m: check_kostka_from_hall(m)))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "golden": suite_golden,
    "crossalg": suite_crossalg,
    "reductions": suite_reductions,
    "structure": suite_structure,
    "specialize": suite_specialize,
    "characters": suite_characters,
    "order": suite_order,
    "bimodule": suite_bimodule,
}


def run_suite(name: str, n: int, **kw) -> list[Check]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if name == "all":
        return [c for fn in SUITES.values() for c in fn(n, **kw)]
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](n, **kw)
