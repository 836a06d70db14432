from __future__ import annotations

import pytest

from dkostka.core import double_dominance_le, double_partitions, total_order
from dkostka.verify import SUITES, alternate_order, golden_table, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_for_small_n(name):
    checks = run_suite(name, 3)
    assert checks
    assert all(c.ok for c in checks), [c.detail for c in checks if not c.ok]


def test_suite_names():
    with pytest.raises(KeyError):
        run_suite("nope", 2)
    with pytest.raises(ValueError):
        run_suite("golden", -1)
    assert all(c.ok for c in run_suite("all", 0))


@pytest.mark.parametrize("n", range(2, 6))
def test_stored_tables_are_well_formed(n):
    doc = golden_table(n)
    assert doc["n"] == n
    assert len(doc["order"]) == len(double_partitions(n))
    assert len(set(doc["order"])) == len(doc["order"])


@pytest.mark.parametrize("n", range(2, 6))
def test_alternate_order_is_a_different_linear_extension(n):
    alt = alternate_order(n)
    assert alt != total_order(n)
    pos = {x: i for i, x in enumerate(alt)}
    for a in alt:
        for b in alt:
            if a != b and double_dominance_le(b, a):
                assert pos[a] < pos[b]
