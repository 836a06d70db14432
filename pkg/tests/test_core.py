from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from dkostka.core import (
    DoublePartition,
    Partition,
    a_stat,
    c_sequence,
    double_dominance_le,
    double_partitions,
    dominance_le,
    format_double_partition,
    n_stat,
    parse_double_partition,
    partitions,
    total_order,
    z_double,
    z_int,
)
from dkostka.poly import RatFn, T


def dp(text: str) -> DoublePartition:
    return parse_double_partition(text)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    # |P_{n,2}| = 1, 2, 5, 10, 20, 36, 65
    assert [len(double_partitions(n)) for n in range(7)] == [1, 2, 5, 10, 20, 36, 65]


def test_partition_validation_and_operations():
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    lam = Partition((3, 1, 1))
    assert lam.conjugate() == Partition((3, 1, 1))
    assert Partition((4, 2)).conjugate() == Partition((2, 2, 1, 1))
    assert Partition((2, 1)) + Partition((1, 1, 1)) == Partition((3, 2, 1))
    assert Partition((2,)).union((3, 1)) == Partition((3, 2, 1))
    assert str(Partition((2, 2, 1))) == "2^21"


def test_notation_examples():
    assert dp("21^2.3^2") == DoublePartition.of((2, 1, 1), (3, 3))
    assert dp("3.") == DoublePartition.of((3,), ())
    assert dp(".21") == DoublePartition.of((), (2, 1))
    assert dp(".") == DoublePartition.of()
    assert dp("{12}.1^{11}") == DoublePartition.of((12,), (1,) * 11)
    for bad in ("21", "1.2.3", "12.", "0.", "a.b", "1^.", "2^0."):
        with pytest.raises(ValueError):
            dp(bad)


@pytest.mark.parametrize("n", range(9))
def test_notation_round_trip(n):
    for lam in double_partitions(n):
        assert dp(format_double_partition(lam)) == lam


def test_n_and_a_statistics():
    assert n_stat((2, 1)) == 1
    assert n_stat((1, 1, 1)) == 3
    assert a_stat(dp("1.1")) == 1
    assert a_stat(dp(".1^2")) == 4
    assert a_stat(dp("21.")) == 2


def test_z_values():
    assert z_int((2, 1, 1)) == 4
    assert z_double(dp("1.")) == RatFn(2, 1 - T)
    assert z_double(dp(".1")) == RatFn(2, 1 + T)


@given(st.integers(1, 7), st.data())
def test_dominance_is_a_partial_order(n, data):
    parts = partitions(n)
    a, b, c = (data.draw(st.sampled_from(parts)) for _ in range(3))
    assert dominance_le(a, a)
    if dominance_le(a, b) and dominance_le(b, a):
        assert a == b
    if dominance_le(a, b) and dominance_le(b, c):
        assert dominance_le(a, c)
    # dominance reverses under conjugation
    assert dominance_le(a, b) == dominance_le(b.conjugate(), a.conjugate())


@pytest.mark.parametrize("n", range(1, 7))
def test_a_is_strictly_monotone_along_double_dominance(n):
    for lam, mu in itertools.permutations(double_partitions(n), 2):
        if double_dominance_le(mu, lam):
            assert a_stat(mu) > a_stat(lam)


@pytest.mark.parametrize("n", range(1, 7))
def test_total_order_is_a_linear_extension(n):
    order = total_order(n)
    assert sorted(order) == sorted(double_partitions(n))
    pos = {x: i for i, x in enumerate(order)}
    for lam, mu in itertools.permutations(order, 2):
        if double_dominance_le(mu, lam):
            assert pos[lam] < pos[mu]


def test_total_order_n2():
    assert [str(x) for x in total_order(2)] == ["2.", "1.1", "1^2.", ".2", ".1^2"]


def test_c_sequence_interleaves():
    assert c_sequence(dp("21.3"), 3) == (2, 3, 1, 0, 0, 0)
