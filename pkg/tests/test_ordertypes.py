from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lattice_exit.errors import MissingVertex, SizeMismatch
from lattice_exit.ordertypes import (
    apply,
    as_mapping,
    canonical_array,
    enumerate_OT,
    instantiate,
    ot_equal,
    ot_equal_pairwise,
    rank_tuple,
    surjections,
)

tuples = st.lists(st.integers(0, 6), min_size=2, max_size=5).map(tuple)


def brute_force_classes(k, p):
    """Partition F_kp with the pairwise definition only."""
    reps = []
    for g in product(range(p), repeat=k):
        if not any(ot_equal_pairwise(g, r) for r in reps):
            reps.append(g)
    return reps


def surjection_count(k, j):
    # inclusion-exclusion, independent of the enumeration
    return sum((-1) ** i * comb(j, i) * (j - i) ** k for i in range(j + 1))


@pytest.mark.parametrize(
    "x, expected",
    [((3, 8, 5, 3, 8), (0, 2, 1, 0, 2)), ((7, 7), (0, 0)), ((11, 4), (1, 0))],
)
def test_rank_tuple(x, expected):
    assert rank_tuple(x) == expected


def test_ot_equal_examples():
    assert ot_equal((4, 7), (4, 11))
    assert not ot_equal((4, 7), (7, 4))
    assert ot_equal((3, 3), (3, 3))


@given(tuples, tuples)
def test_two_definitions_agree(x, y):
    assert ot_equal(x, y) == ot_equal_pairwise(x, y)


@given(tuples, tuples, tuples)
def test_ot_is_equivalence(x, y, z):
    assert ot_equal(x, x)
    assert ot_equal(x, y) == ot_equal(y, x)
    if ot_equal(x, y) and ot_equal(y, z):
        assert ot_equal(x, z)


@given(tuples)
def test_rank_tuple_is_representative(x):
    r = rank_tuple(x)
    assert ot_equal(r, x)
    assert set(r) == set(range(len(set(x))))


def test_enumerate_OT_small():
    assert enumerate_OT(2, 3) == [(0, 0), (0, 1), (1, 0)]
    assert enumerate_OT(2, 1) == [(0, 0)]
    assert len(enumerate_OT(3, 3)) == 13


@pytest.mark.parametrize("k, p", [(k, p) for k in range(1, 5) for p in range(1, 5)])
def test_enumerate_OT_matches_brute_force(k, p):
    assert len(enumerate_OT(k, p)) == len(brute_force_classes(k, p))
    assert sorted(enumerate_OT(k, p)) == sorted(rank_tuple(r) for r in brute_force_classes(k, p))


@pytest.mark.parametrize("k", range(1, 6))
def test_class_count_is_sum_of_surjection_counts(k):
    assert len(enumerate_OT(k, k)) == sum(surjection_count(k, j) for j in range(1, k + 1))
    for j in range(1, k + 1):
        assert len(surjections(k, j)) == surjection_count(k, j)
    assert len(surjections(k, k)) == factorial(k)


def test_canonical_array_2_3():
    T = canonical_array(2, 3)
    assert T.rows == (
        ((0, 0), (1, 1), (2, 2)),
        ((0, 1), (0, 2), (1, 2)),
        ((1, 0), (2, 0), (2, 1)),
    )
    assert T.m == 3


def test_canonical_array_rows_are_classes():
    for k, p in [(2, 3), (3, 4), (3, 2), (4, 3)]:
        T = canonical_array(k, p)
        assert sum(len(r) for r in T.rows) == p**k
        assert list(T.first_column) == enumerate_OT(k, p)
        for row in T.rows:
            assert list(row) == sorted(row)
            assert all(ot_equal(row[0], g) for g in row)


def test_canonical_array_3_4_class_120():
    T = canonical_array(3, 4)
    row = next(r for r in T.rows if r[0] == (1, 2, 0))
    assert row == ((1, 2, 0), (1, 3, 0), (2, 3, 0), (2, 3, 1))


def test_instantiate_worked_E():
    X = instantiate(canonical_array(2, 3), [11, 4, 7])
    assert X.entries == (
        ((4, 4), (7, 7), (11, 11)),
        ((4, 7), (4, 11), (7, 11)),
        ((7, 4), (11, 4), (11, 7)),
    )


def test_instantiate_single_value():
    T = canonical_array(2, 1)
    assert instantiate(T, [5]).entries == (((5, 5),),)


def test_instantiate_covers_cube():
    E = [2, 3, 9, 10]
    X = instantiate(canonical_array(3, 4), E)
    entries = list(X.flat())
    assert len(entries) == len(set(entries)) == 4**3
    assert set(entries) == set(product(E, repeat=3))


def test_instantiate_size_mismatch():
    with pytest.raises(SizeMismatch):
        instantiate(canonical_array(2, 3), [1, 2])


def test_apply():
    X = instantiate(canonical_array(2, 3), [4, 7, 11])
    const = {z: 5 for z in X.flat()}
    assert apply(const, X).entries == ((5,) * 3,) * 3
    mins = apply({z: min(z) for z in X.flat()}, X)
    assert all(v == min(z) for z, v in zip(X.flat(), mins.flat()))
    with pytest.raises(MissingVertex):
        apply({}, X)


@given(st.permutations(range(3)), st.permutations([1, 2]))
def test_permuting_rows_preserves_function(row_perm, col_perm):
    X = instantiate(canonical_array(2, 3), [4, 7, 11])
    Y = apply({z: 3 * z[0] + z[1] for z in X.flat()}, X)
    want = as_mapping(X, Y)
    cols = [0] + list(col_perm)
    Xp = [tuple(X.entries[i][c] for c in cols) for i in row_perm]
    Yp = [tuple(Y.entries[i][c] for c in cols) for i in row_perm]
    got = {z: v for rx, ry in zip(Xp, Yp) for z, v in zip(rx, ry)}
    assert got == want
    assert sorted(r[0] for r in Xp) == sorted(X.entries[i][0] for i in range(3))
