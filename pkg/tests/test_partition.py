import pytest

from redschur.partition import (
    BorderStripRemoval,
    Partition,
    border_strip_removals,
    conjugate,
    euler_series,
    partition_series,
    partition_tuples,
    partitions_of,
    series_mul,
)

from oracles import conjugate_by_cells, strip_removals_by_cells


def test_constructor_normalizes_and_validates():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    assert Partition() == ()
    assert Partition([0, 0]) == ()
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([3, -1])
    with pytest.raises(ValueError):
        Partition([3, 0, 1])


def test_basic_accessors():
    lam = Partition([4, 2, 1])
    assert lam.size == 7
    assert lam.part(1) == 4 and lam.part(3) == 1 and lam.part(9) == 0
    assert lam.contains(Partition([2, 2]))
    assert not lam.contains(Partition([5]))
    assert not Partition([2]).contains(Partition([1, 1]))


def test_conjugate_golden_and_involution():
    assert conjugate(Partition([3, 1])) == (2, 1, 1)
    assert conjugate(Partition()) == ()
    for n in range(9):
        for lam in partitions_of(n):
            assert lam.conjugate() == conjugate_by_cells(lam)
            assert lam.conjugate().conjugate() == lam


def test_border_strip_golden():
    # a single 3-strip comes off (2,1), spanning two rows
    assert border_strip_removals(Partition([2, 1]), 3) == [
        BorderStripRemoval(Partition(), 1)
    ]
    assert border_strip_removals(Partition([1]), 1) == [
        BorderStripRemoval(Partition(), 0)
    ]
    assert border_strip_removals(Partition([2, 2]), 3) == [
        BorderStripRemoval(Partition([1]), 1)
    ]
    assert border_strip_removals(Partition(), 1) == []
    with pytest.raises(ValueError):
        border_strip_removals(Partition([2]), 0)


def test_border_strips_match_cell_enumeration():
    # the hook-walk construction against brute-force skew connectivity,
    # including the ascending-topmost-row ordering
    for n in range(8):
        for lam in partitions_of(n):
            for length in range(1, n + 1):
                got = [(r.result, r.height) for r in border_strip_removals(lam, length)]
                want = [(mu, h) for mu, h, _ in strip_removals_by_cells(lam, length)]
                assert got == want, (lam, length)


def test_results_are_valid_partitions_of_right_size():
    for n in range(9):
        for lam in partitions_of(n):
            for length in (2, 3, 5):
                for r in border_strip_removals(lam, length):
                    assert isinstance(r.result, Partition)
                    assert r.result.size == n - length
                    assert 0 <= r.height < len(lam) + 1


def test_partitions_of_order_and_count():
    assert partitions_of(0) == [Partition()]
    assert partitions_of(4) == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1),
    ]
    counts = partition_series(12)
    for n in range(13):
        ps = partitions_of(n)
        assert len(ps) == counts[n]
        assert len(set(ps)) == len(ps)
        assert all(p.size == n for p in ps)
        # reverse-lexicographic: each successor compares smaller as a tuple
        assert all(a > b for a, b in zip(ps, ps[1:]))
    with pytest.raises(ValueError):
        partitions_of(-1)


def test_partition_tuples_counts():
    counts = partition_series(8)
    for total in range(7):
        for slots in range(4):
            tups = partition_tuples(total, slots)
            assert len(set(tups)) == len(tups)
            assert all(sum(p.size for p in t) == total for t in tups)
            expect = sum(
                counts[a] * counts[b] * counts[total - a - b]
                for a in range(total + 1)
                for b in range(total + 1 - a)
            ) if slots == 3 else None
            if slots == 3:
                assert len(tups) == expect


def test_series_helpers():
    # pentagonal-number pattern of the Euler product
    assert euler_series(12) == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
    assert partition_series(10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    # multiplying the product by its inverse gives 1
    n = 15
    assert series_mul(euler_series(n), partition_series(n), n) == [1] + [0] * n
