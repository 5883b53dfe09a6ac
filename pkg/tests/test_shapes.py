import math
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from hookpaths.shapes import (
    StdTableau,
    check_partition,
    conjugate,
    enumerate_SYT,
    hook_tableau_from_descents,
    is_hook,
    make_hook,
    normalize_shape,
    parse_partition,
    partition_str,
    partitions_of,
)


def hook_length_count(shape):
    """Independent tableau count via the hook-length product."""
    n = sum(shape)
    cols = conjugate(shape)
    product = 1
    for i, row in enumerate(shape):
        for j in range(row):
            product *= (row - j) + (cols[j] - i) - 1
    return math.factorial(n) // product


def test_conjugate_examples():
    assert conjugate((4, 2, 2, 1, 1)) == (5, 3, 1, 1)
    assert conjugate((7,)) == (1,) * 7
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()


@given(st.integers(min_value=0, max_value=9))
def test_conjugate_involution(n):
    for lam in partitions_of(n):
        assert conjugate(conjugate(lam)) == lam


def test_partition_validation():
    with pytest.raises(ValueError):
        check_partition((2, 3))
    with pytest.raises(ValueError):
        check_partition((3, 0))
    assert check_partition([5, 5, 1]) == (5, 5, 1)


def test_normalize_shape():
    assert normalize_shape((3, 1, 0, 0)) == (3, 1)
    assert normalize_shape((0,)) == ()
    assert normalize_shape((0, 1)) is None
    assert normalize_shape((-1,)) is None
    assert normalize_shape((2, 3)) is None


def test_hooks():
    assert is_hook((4, 1, 1))
    assert not is_hook((3, 2))
    assert is_hook((6,))
    assert is_hook(())
    assert make_hook(1, 2) == (1, 1, 1)
    assert make_hook(4, 0) == (4,)
    with pytest.raises(ValueError):
        make_hook(0, 3)


def test_partition_text():
    assert parse_partition("4,2,2,1,1") == (4, 2, 2, 1, 1)
    assert partition_str((4, 2, 2, 1, 1)) == "4,2,2,1,1"
    assert parse_partition("empty") == ()


def test_fig3_tableau_statistics():
    tau = StdTableau.parse("1,2,4,8/3,7/5,10/6/9")
    assert tau.shape == (4, 2, 2, 1, 1)
    assert tau.descent_set() == frozenset({2, 4, 5, 8})
    assert tau.des() == 4
    assert tau.maj() == 19
    conj = tau.conjugate()
    assert conj.shape == (5, 3, 1, 1)
    assert conj.descent_set() == frozenset({1, 3, 6, 7, 9})
    assert conj.conjugate() == tau


def test_row_and_column_tableaux():
    row = StdTableau([(1, 2, 3, 4, 5)])
    assert row.descent_set() == frozenset()
    assert row.maj() == 0
    col = row.conjugate()
    assert col.shape == (1,) * 5
    assert col.descent_set() == frozenset({1, 2, 3, 4})
    assert col.maj() == 10


def test_tableau_validation():
    with pytest.raises(ValueError):
        StdTableau([(1, 2), (4, 3)])  # row must increase
    with pytest.raises(ValueError):
        StdTableau([(2, 1)])
    with pytest.raises(ValueError):
        StdTableau([(1, 2), (2,)])  # duplicate entry
    with pytest.raises(ValueError):
        StdTableau([(2, 3), (1, 4)])  # column must increase upward


def test_enumerate_syt_counts():
    assert len(enumerate_SYT((3, 1))) == 3
    for n in range(1, 8):
        assert len(enumerate_SYT((1,) * n)) == 1
    for n in range(2, 9):
        for k in range(n):
            shape = (k + 1,) + (1,) * (n - k - 1)
            assert len(enumerate_SYT(shape)) == math.comb(n - 1, k)
    for n in range(1, 9):
        for lam in partitions_of(n):
            assert len(enumerate_SYT(lam)) == hook_length_count(lam)


def test_enumerate_syt_distinct_and_bounded():
    tableaux = enumerate_SYT((3, 2, 1))
    assert len(set(tableaux)) == len(tableaux)
    with pytest.raises(ValueError):
        enumerate_SYT((13,))
    assert len(enumerate_SYT((13,), bound=13)) == 1


def test_descent_complement_invariants():
    for n in range(1, 9):
        full = frozenset(range(1, n))
        for lam in partitions_of(n):
            for tau in enumerate_SYT(lam):
                conj = tau.conjugate()
                assert conj.descent_set() == full - tau.descent_set()
                assert tau.maj() + conj.maj() == n * (n - 1) // 2
                assert tau.des() == n - 1 - conj.des()


def test_hook_tableau_from_descents():
    tau = hook_tableau_from_descents({1, 2, 4, 5}, 7)
    assert tau.shape == (3, 1, 1, 1, 1)
    assert tau.rows[0] == (1, 4, 7)
    assert [row[0] for row in tau.rows[1:]] == [2, 3, 5, 6]
    assert tau.descent_set() == frozenset({1, 2, 4, 5})
    assert hook_tableau_from_descents(set(), 5).shape == (5,)
    with pytest.raises(ValueError):
        hook_tableau_from_descents({5}, 5)


def test_hook_descent_bijection_exhaustive():
    for n in range(1, 10):
        seen = set()
        for k in range(n):
            for subset in combinations(range(1, n), k):
                tau = hook_tableau_from_descents(subset, n)
                assert tau.descent_set() == frozenset(subset)
                seen.add(tau)
        hook_count = sum(
            len(enumerate_SYT((a,) + (1,) * (n - a))) for a in range(1, n + 1)
        )
        assert len(seen) == 2 ** (n - 1) == hook_count


def test_tableau_text_round_trip():
    tau = StdTableau.parse("1,2,4,8/3,7/5,10/6/9")
    assert StdTableau.parse(str(tau)) == tau
