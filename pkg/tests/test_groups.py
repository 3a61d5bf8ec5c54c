import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tward import (
    CayleyTable,
    as_group,
    counts_row,
    enumerate_groups,
    is_group,
    partition_number,
    q_count,
    table_isomorphic,
)
from tward.errors import StructureError
from tward.groups import CLASSICAL_GROUP_COUNTS, MAX_GROUP_ORDER, FiniteGroup

Q_EXPECTED = (1, 1, 2, 5, 4, 5, 6, 25, 14, 9, 10)
P_EXPECTED = (1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56)


def test_as_group_validates(cyclic3, table4):
    g = as_group(cyclic3)
    assert g.n == 3 and g.inv(1) == 2 and g.element_order(1) == 3
    assert g.is_abelian()
    with pytest.raises(StructureError):
        as_group(table4)
    # quasigroup without an identity element
    with pytest.raises(StructureError):
        as_group(CayleyTable.from_rows([[1, 0, 2], [0, 2, 1], [2, 1, 0]]))


def test_as_group_relabels_identity():
    # Z2 with identity sitting at label 1
    t = CayleyTable.from_rows([[1, 0], [0, 1]])
    shifted = CayleyTable.from_rows([[0, 1], [1, 0]])
    assert is_group(shifted)
    assert as_group(shifted).table.rows[0] == (0, 1)


def test_nonassociative_rejected():
    # latin square with identity 0 that is not associative
    t = CayleyTable.from_rows(
        [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 3, 4, 0, 1],
            [3, 4, 1, 2, 0],
            [4, 2, 0, 1, 3],
        ]
    )
    assert not is_group(t)


def test_group_counts_per_order():
    for n in range(1, MAX_GROUP_ORDER + 1):
        assert len(enumerate_groups(n)) == CLASSICAL_GROUP_COUNTS[n - 1]


def test_enumerated_groups_are_pairwise_nonisomorphic():
    for n in (6, 8, 12):
        cat = enumerate_groups(n)
        for i, g in enumerate(cat):
            assert is_group(g.table)
            for h in cat[i + 1 :]:
                assert not table_isomorphic(g.table, h.table)


def test_abelian_breakdown_order8():
    cat = enumerate_groups(8)
    assert sum(1 for g in cat if g.is_abelian()) == 3


def test_q_counts():
    for n, expect in enumerate(Q_EXPECTED, start=1):
        assert q_count(n) == expect


def test_partition_numbers():
    for n, expect in enumerate(P_EXPECTED, start=1):
        assert partition_number(n) == expect
    assert partition_number(0) == 1
    with pytest.raises(ValueError):
        partition_number(-1)


@given(st.integers(1, 30))
@settings(deadline=None)
def test_partition_recurrence(n):
    # p(n) - p(n-1) counts partitions with all parts >= 2; cross-check via
    # the conjugate identity p(n, parts >= 2) = p(n) - p(n - 1)
    def slow(n, least):
        if n == 0:
            return 1
        return sum(slow(n - k, k) for k in range(least, n + 1))

    assert partition_number(n) == slow(n, 1)


def test_counts_row():
    row = counts_row(5, budget_seconds=120.0)
    assert (row.n, row.ell, row.q, row.p) == (5, 11, 4, 7)
    row10 = counts_row(10, with_ell=False)
    assert row10.ell is None and row10.q == 9 and row10.p == 42


def test_group_table_identity_normalized():
    with pytest.raises(ValueError):
        FiniteGroup(CayleyTable.from_rows([[1, 0], [0, 1]]))
