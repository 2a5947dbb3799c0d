from collections import Counter

import pytest
from hypothesis import given, strategies as st

from kcharge.cores import (
    Cell,
    Partition,
    add_residue_class,
    addable_corners,
    enumerate_cores,
    hook_length,
    is_n_core,
    k_bounded_hooks,
    k_interior,
    n_stat,
    parse_partition,
    partition_sort_key,
    partitions,
    removable_corners,
    residue,
)


@st.composite
def partition_strategy(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Partition()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    return Partition(sorted(Counter(bins).values(), reverse=True))


def all_partitions_up_to(max_size):
    for size in range(max_size + 1):
        yield from partitions(size)


def test_partition_construction():
    assert Partition() == ()
    assert Partition([3, 2, 2]) == (3, 2, 2)
    assert Partition((5,)).size() == 5
    with pytest.raises(ValueError):
        Partition([2, 3])
    with pytest.raises(ValueError):
        Partition([1, 0])
    with pytest.raises(ValueError):
        Partition([-1])
    with pytest.raises(ValueError):
        Partition([10**6 + 1])


def test_partition_text_form():
    assert str(Partition([7, 3, 2, 1, 1])) == "(7,3,2,1,1)"
    assert str(Partition()) == "()"
    assert parse_partition("(7,3,2,1,1)") == Partition([7, 3, 2, 1, 1])
    assert parse_partition("()") == Partition()
    with pytest.raises(ValueError):
        parse_partition("7,3")


def test_conjugate():
    assert Partition([5, 3, 2, 2, 1, 1]).conjugate() == (6, 4, 2, 1, 1)
    assert Partition().conjugate() == ()
    assert Partition([3]).conjugate() == (1, 1, 1)


@given(partition_strategy())
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam


def test_hook_length_known():
    assert hook_length(Partition([1]), Cell(1, 1)) == 1
    assert hook_length(Partition([6, 2, 2, 1]), Cell(1, 1)) == 9
    with pytest.raises(ValueError):
        hook_length(Partition([2]), Cell(2, 1))


def test_five_core_has_no_hook_five():
    shape = Partition([7, 3, 2, 1, 1])
    assert all(hook_length(shape, c) != 5 for c in shape.cells())
    assert is_n_core(shape, 5)


def test_is_n_core():
    assert is_n_core(Partition(), 2)
    assert not is_n_core(Partition([1, 1]), 2)
    assert is_n_core(Partition([5, 2, 1]), 4)
    with pytest.raises(ValueError):
        is_n_core(Partition([1]), 1)


@given(partition_strategy())
def test_hooks_positive_and_unit_hooks_are_bare_corners(lam):
    for c in lam.cells():
        h = hook_length(lam, c)
        assert h >= 1
        arm = lam[c.row - 1] - c.col
        leg = lam.conjugate()[c.col - 1] - c.row
        assert (h == 1) == (arm == 0 and leg == 0)


def test_residue_known():
    assert residue(Cell(1, 1), 5) == 0
    assert residue(Cell(2, 1), 5) == 4
    assert residue(Cell(1, 6), 5) == 0
    with pytest.raises(ValueError):
        residue(Cell(1, 1), 1)


@given(st.integers(1, 30), st.integers(1, 30), st.integers(2, 9))
def test_residue_constant_on_diagonals(i, j, n):
    assert residue(Cell(i, j), n) == residue(Cell(i + 1, j + 1), n)


def test_addable_corners_known():
    assert addable_corners(Partition([2]), 5) == [(Cell(1, 3), 2), (Cell(2, 1), 4)]
    assert addable_corners(Partition(), 5) == [(Cell(1, 1), 0)]
    corners = addable_corners(Partition([4, 1, 1]), 5)
    assert (Cell(1, 5), 4) in corners
    assert (Cell(4, 1), 2) in corners


def test_removable_corners_known():
    assert removable_corners(Partition([1]), 3) == [(Cell(1, 1), 0)]
    assert removable_corners(Partition([5, 2, 1]), 4) == [
        (Cell(1, 5), 0),
        (Cell(2, 2), 0),
        (Cell(3, 1), 2),
    ]
    assert removable_corners(Partition(), 4) == []


@given(partition_strategy(), st.integers(2, 6))
def test_corner_duality(lam, n):
    for corner, res in addable_corners(lam, n):
        parts = list(lam)
        if corner.row > len(parts):
            parts.append(corner.col)
        else:
            parts[corner.row - 1] = corner.col
        grown = Partition(parts)
        assert (corner, res) in removable_corners(grown, n)


def test_k_interior_known():
    assert len(k_interior(Partition([6, 2, 2, 1]), 4)) == 2
    assert len(k_interior(Partition([9, 5, 3, 2, 1, 1]), 4)) == 8
    with pytest.raises(ValueError):
        k_interior(Partition([1]), 0)


@given(partition_strategy(), st.integers(1, 12))
def test_interior_empty_iff_k_exceeds_principal_hook(lam, k):
    principal = (lam[0] + len(lam) - 1) if lam else 0
    assert (len(k_interior(lam, k)) == 0) == (k > principal - 1)


@given(partition_strategy(), st.integers(1, 10))
def test_bounded_hooks_plus_interior_is_size(lam, k):
    assert k_bounded_hooks(lam, k) + len(k_interior(lam, k)) == lam.size()


def test_k_bounded_hooks_known():
    assert k_bounded_hooks(Partition([5, 2, 1]), 3) == 6
    assert k_bounded_hooks(Partition([6, 2, 2, 1]), 4) == 9
    assert k_bounded_hooks(Partition(), 3) == 0


def test_n_stat_known():
    assert n_stat(Partition()) == 0
    assert n_stat(Partition([1] * 9)) == 36
    assert n_stat(Partition([2, 2, 2, 2, 2, 2, 1])) == 36


def test_enumerate_cores_two_core_staircases():
    assert enumerate_cores(2, 2) == [Partition(), Partition([1]), Partition([2, 1])]
    assert enumerate_cores(3, 0) == [Partition()]
    assert Partition([5, 2, 1]) in enumerate_cores(4, 6)


@pytest.mark.parametrize("n,bound,window", [(2, 3, 12), (3, 4, 14), (4, 4, 12), (5, 3, 10)])
def test_enumerate_cores_matches_brute_filter(n, bound, window):
    enumerated = enumerate_cores(n, bound)
    assert max((c.size() for c in enumerated), default=0) <= window
    brute = {
        lam
        for lam in all_partitions_up_to(window)
        if is_n_core(lam, n) and k_bounded_hooks(lam, n - 1) <= bound
    }
    assert set(enumerated) == brute
    assert enumerated == sorted(enumerated, key=partition_sort_key)


@pytest.mark.parametrize("n,bound", [(2, 4), (3, 5), (4, 5), (5, 4)])
def test_residue_fill_adds_one_bounded_hook(n, bound):
    for core in enumerate_cores(n, bound):
        before = k_bounded_hooks(core, n - 1)
        for res in range(n):
            grown = add_residue_class(core, n, res)
            if grown is not None:
                assert is_n_core(grown, n)
                assert k_bounded_hooks(grown, n - 1) == before + 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cores_never_share_addable_and_removable_residue(n):
    for core in enumerate_cores(n, 6):
        addable = {r for _, r in addable_corners(core, n)}
        removable = {r for _, r in removable_corners(core, n)}
        assert not (addable & removable), (core, addable & removable)


def test_canonical_order_is_size_then_reverse_lex():
    shapes = [
        Partition([3, 3]),
        Partition([6, 3]),
        Partition([4, 2]),
        Partition([2, 2, 2]),
        Partition([5, 2, 1]),
        Partition(),
    ]
    ordered = sorted(shapes, key=partition_sort_key)
    assert ordered == [
        Partition(),
        Partition([4, 2]),
        Partition([3, 3]),
        Partition([2, 2, 2]),
        Partition([5, 2, 1]),
        Partition([6, 3]),
    ]
