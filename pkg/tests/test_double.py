from __future__ import annotations

import itertools

import pytest

from dkostka.core import DoublePartition, a_stat, double_dominance_le, double_partitions, parse_double_partition, total_order
from dkostka.double import (
    double_kostka_matrix,
    double_kostka_via_f,
    double_kostka_via_lr,
    gram_schmidt_hl,
    hl_double_in_schur,
    inner_product,
    modified_double_kostka,
    s_to_p_double,
    specialize_diagonal_t1,
)
from dkostka.poly import IntPoly, RatFn, T
from dkostka.tableaux import double_kostka_charge


def dp(text: str) -> DoublePartition:
    return parse_double_partition(text)


def test_n1_values():
    P = gram_schmidt_hl(1)
    assert P[dp("1.")] == {dp("1."): IntPoly(1), dp(".1"): -T}
    assert P[dp(".1")] == {dp(".1"): IntPoly(1)}
    K = double_kostka_matrix(1)
    assert K == {(dp("1."), dp("1.")): IntPoly(1), (dp("1."), dp(".1")): T, (dp(".1"), dp(".1")): IntPoly(1)}


def test_n0_is_trivial():
    e = DoublePartition.of()
    assert double_kostka_matrix(0) == {(e, e): IntPoly(1)}


def test_twisted_power_sums_n1():
    # s_(1;-) = p_1(x1) = (p1 + p2)/2 and s_(-;1) = (p1 - p2)/2 in twisted power sums
    assert s_to_p_double(dp("1.")) == {dp("1."): 1 / 2, dp(".1"): 1 / 2}
    assert s_to_p_double(dp(".1")) == {dp("1."): 1 / 2, dp(".1"): -1 / 2}


def test_inner_product_n1():
    one = IntPoly(1)
    # p_(1;-) = p1 + p2, p_(-;1) = p1 - p2 with <p1, p1> = 2/(1-t), <p2, p2> = 2/(1+t)
    assert inner_product({dp("1."): one}, {dp("1."): one}) == RatFn(IntPoly(1), 1 - T * T)
    assert inner_product({dp("1."): one}, {dp(".1"): one}) == RatFn(T, 1 - T * T)


@pytest.mark.parametrize("n", range(1, 4))
def test_hall_littlewood_functions_are_orthogonal(n):
    P = gram_schmidt_hl(n)
    for a, b in itertools.combinations_with_replacement(double_partitions(n), 2):
        ip = inner_product(P[a], P[b])
        assert (ip == RatFn()) == (a != b)


@pytest.mark.parametrize("n", range(1, 4))
def test_schur_functions_are_orthonormal_at_t0(n):
    for a, b in itertools.product(double_partitions(n), repeat=2):
        assert inner_product({a: IntPoly(1)}, {b: IntPoly(1)})(0) == (a == b)


@pytest.mark.parametrize("n", range(1, 5))
def test_unitriangular_and_specialises_to_identity_at_t0(n):
    K = double_kostka_matrix(n)
    for lam in double_partitions(n):
        assert K[lam, lam] == IntPoly(1)
        P = hl_double_in_schur(lam)
        assert P[lam] == IntPoly(1)
        for mu in P:
            assert double_dominance_le(mu, lam)
    for (lam, mu), k in K.items():
        assert k(0) == (lam == mu)


def test_frozen_small_entries():
    K = double_kostka_matrix(2)
    assert K[dp("1.1"), dp(".1^2")] == T**3 + T
    assert K[dp("2."), dp(".1^2")] == T**4
    K3 = double_kostka_matrix(3)
    assert K3[dp("2.1"), dp(".21")] == T**4 + T**2
    assert modified_double_kostka(dp("2.1"), dp(".21")) == T**3 + T


def test_order_must_be_a_linear_extension():
    bad = tuple(reversed(total_order(2)))
    with pytest.raises(ValueError):
        double_kostka_matrix(2, order=bad)


def test_modified_is_a_polynomial_with_even_or_odd_powers():
    for lam, mu in itertools.product(double_partitions(3), repeat=2):
        kt = modified_double_kostka(lam, mu)
        if kt:
            assert kt.is_polynomial()
            assert len({e % 2 for e in kt.coefficients}) == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_second_column_routes(n):
    from dkostka.core import partitions

    K = double_kostka_matrix(n)
    e = DoublePartition.of().first
    for lam in double_partitions(n):
        for mu2 in partitions(n):
            want = K.get((lam, DoublePartition(e, mu2)), IntPoly())
            assert double_kostka_charge(lam, mu2) == want
            assert double_kostka_via_f(lam, mu2) == want
            assert double_kostka_via_lr(lam, mu2) == want


def test_diagonal_specialisation_at_t1():
    from fractions import Fraction

    from dkostka.core import Partition

    # P_M(y, y; 1) = m_{mu''} when mu' is empty, zero otherwise
    assert specialize_diagonal_t1(dp(".21")) == {Partition((2, 1)): Fraction(1)}
    assert specialize_diagonal_t1(dp("1.1")) == {}


def test_a_statistic_matches_degrees():
    K = double_kostka_matrix(3)
    for (lam, mu), k in K.items():
        assert k.degree == a_stat(mu) - a_stat(lam)
