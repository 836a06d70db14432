from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from dkostka.core import DoublePartition, Partition, double_partitions, partitions
from dkostka.fq import (
    bimodule_counts,
    check_field,
    compare_with_polynomials,
    count_bimodule_varieties,
    count_g_variety,
    enhanced_type,
    g_counts,
    inverse,
    jordan_type,
    matmul,
    matvec,
    orbit_census,
    rank,
    representative,
    representatives,
    rref,
    subspaces,
)
from dkostka.hall import G_left, G_right, g_double
from dkostka.symfunc import g_hall

E = Partition()


def gaussian_binomial(n: int, d: int, q: int) -> int:
    num = den = 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@pytest.mark.parametrize("n, q", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (4, 2)])
def test_subspace_counts_are_gaussian_binomials(n, q):
    for d in range(n + 1):
        subs = subspaces(n, d, q)
        assert len(subs) == gaussian_binomial(n, d, q)
        assert all(rank(s, q) == d for s in subs)


def test_parameter_checks():
    for bad in [(2, 4), (2, 1), (2, 7), (5, 2)]:
        with pytest.raises(ValueError):
            check_field(*bad)
    check_field(4, 5)


@given(st.sampled_from([2, 3, 5]), st.integers(0, 10_000))
def test_random_matrix_inverse(q, seed):
    rng = random.Random(seed)
    a = tuple(tuple(rng.randrange(q) for _ in range(3)) for _ in range(3))
    if rank(a, q) < 3:
        return
    ai = inverse(a, q)
    ident = tuple(tuple(int(i == j) for j in range(3)) for i in range(3))
    assert matmul(a, ai, q) == ident
    assert len(rref(a, q)) == 3


@pytest.mark.parametrize("q", [2, 3])
def test_jordan_types_of_normal_forms(q):
    for n in range(1, 5):
        for lam in double_partitions(n):
            x, v = representative(lam, q)
            assert jordan_type(x, q) == lam.first + lam.second
            assert enhanced_type(x, v, q) == lam


def test_extreme_labels():
    q = 3
    x, _ = representative(DoublePartition(Partition((2, 1)), E), q)
    assert enhanced_type(x, (0, 0, 0), q) == DoublePartition(E, Partition((2, 1)))
    # a cyclic vector gives (type(x); -)
    x, v = representative(DoublePartition(Partition((3,)), E), q)
    assert v == (0, 0, 1)
    assert enhanced_type(x, v, q) == DoublePartition(Partition((3,)), E)


@pytest.mark.parametrize("q", [2, 3])
def test_representatives_lie_in_the_orbit(q):
    for lam in double_partitions(3):
        reps = representatives(lam, q, count=3, seed=7)
        assert len(reps) == 3
        for x, v in reps:
            assert enhanced_type(x, v, q) == lam


@pytest.mark.parametrize("n, q", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_orbit_census(n, q):
    sizes = orbit_census(n, q)
    assert set(sizes) == set(double_partitions(n))
    # q^(n^2 - n) nilpotent matrices times q^n vectors
    assert sum(sizes.values()) == q ** (n * n)


@pytest.mark.parametrize("q", [2, 3])
def test_v_zero_counts_are_hall_polynomials(q):
    for n in range(1, 4):
        for lam in partitions(n):
            x, v = representative(DoublePartition(E, lam), q)
            counts = g_counts(x, v, q)
            for k in range(n + 1):
                for sub in partitions(k):
                    for quo in partitions(n - k):
                        got = counts.get(DoublePartition(sub, quo), 0)
                        assert got == g_hall(quo, sub, lam)(q)


@pytest.mark.parametrize("q", [2, 3])
def test_counts_match_polynomials_n2(q):
    for mu in double_partitions(2):
        for nu in double_partitions(2):
            assert count_g_variety(mu, nu, q) == g_double(mu, nu)(q)
    lam = DoublePartition(Partition((1,)), Partition((1,)))
    one = Partition((1,))
    for mu in double_partitions(1):
        left = G_left(one, mu).get(lam)
        assert count_bimodule_varieties(lam, one, mu, q, "left") == (left(q) if left else 0)
        right = G_right(mu, one).get(lam)
        assert count_bimodule_varieties(lam, one, mu, q, "right") == (right(q) if right else 0)


def test_g_can_vanish_at_small_q():
    lam = DoublePartition(Partition((2, 1)), Partition((1,)))
    mu = DoublePartition(Partition((1,)), Partition((1,)))
    g = G_left(Partition((2,)), mu)[lam]
    assert g(2) == 0 and g
    x, v = representative(lam, 2)
    assert bimodule_counts(x, v, 2, "left").get((Partition((2,)), mu), 0) == 0


def test_bimodule_counts_reject_bad_side():
    x, v = representative(DoublePartition(Partition((1,)), E), 2)
    with pytest.raises(ValueError):
        bimodule_counts(x, v, 2, "middle")


@pytest.mark.parametrize("n, q", [(1, 2), (2, 3), (3, 2)])
def test_comparison_rows_all_match(n, q):
    rows = compare_with_polynomials(n, q)
    assert rows
    assert all(r.match for r in rows)
    assert all(len(r.counts) == 2 for r in rows)


def test_matvec():
    assert matvec(((0, 1), (0, 0)), (1, 1), 2) == (1, 0)
