import pytest

from redschur.affine import (
    WeightLabel,
    multiplicity_series,
    r_core_partitions,
    weight_basis,
    weight_of,
)
from redschur.maya import r_decompose
from redschur.partition import Partition, partitions_of
from redschur.polyring import linear_rank
from redschur.reduce import basic_set
from redschur.schur import reduced_schur


def test_weight_of_golden():
    w = weight_of(Partition([2]), 2)
    assert w == WeightLabel(Partition(), 1, 2)
    assert weight_of(Partition(), 5) == WeightLabel(Partition(), 0, 5)
    assert weight_of(Partition([2, 1, 1]), 2) == WeightLabel(Partition(), 2, 2)
    # (1,1) has 2-quotient ((1), ()), so it carries no weight label
    with pytest.raises(ValueError):
        weight_of(Partition([1, 1]), 2)


def test_weight_of_accepts_exactly_the_basic_set():
    for r in (2, 3):
        for n in range(8):
            members = set(basic_set(r, n))
            for lam in partitions_of(n):
                if lam in members:
                    w = weight_of(lam, r)
                    assert w.core.size + r * w.depth == n
                    assert w.r == r
                else:
                    with pytest.raises(ValueError):
                        weight_of(lam, r)


def test_weight_basis_golden():
    basis = weight_basis(WeightLabel(Partition([1]), 2, 2))
    assert basis == [Partition([2, 2, 1]), Partition([1, 1, 1, 1, 1])]
    assert weight_basis(WeightLabel(Partition(), 0, 3)) == [Partition()]


def test_weight_basis_properties():
    for r in (2, 3):
        for core in r_core_partitions(r, 3):
            for depth in range(4):
                label = WeightLabel(core, depth, r)
                basis = weight_basis(label)
                assert len(set(basis)) == len(basis)
                assert basis == sorted(basis, reverse=True)
                for lam in basis:
                    assert lam.size == core.size + r * depth
                    assert weight_of(lam, r) == label


def test_weight_basis_rejects_non_core():
    with pytest.raises(ValueError):
        weight_basis(WeightLabel(Partition([2]), 1, 2))
    with pytest.raises(ValueError):
        weight_basis(WeightLabel(Partition(), -1, 2))


def test_multiplicity_series_golden():
    assert multiplicity_series(2, 8) == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert multiplicity_series(3, 8) == [1, 2, 5, 10, 20, 36, 65, 110, 185]
    assert multiplicity_series(4, 8) == [1, 3, 9, 22, 51, 108, 221, 429, 810]
    with pytest.raises(ValueError):
        multiplicity_series(1, 5)


def test_weight_space_dimensions_are_core_independent():
    for r in (2, 3):
        series = multiplicity_series(r, 4)
        cores = r_core_partitions(r, 4)
        assert len(cores) >= 2
        for core in cores:
            for depth in range(5 if r == 2 else 4):
                assert len(weight_basis(WeightLabel(core, depth, r))) == series[depth]


def test_partition_of_basic_set_by_weight():
    # the basic set in each degree is the disjoint union of the weight bases
    for r in (2, 3):
        for n in range(8):
            collected = []
            for core in r_core_partitions(r, n):
                if (n - core.size) % r:
                    continue
                depth = (n - core.size) // r
                collected.extend(weight_basis(WeightLabel(core, depth, r)))
            assert sorted(collected) == sorted(basic_set(r, n))


def test_weight_basis_polynomials_independent():
    for r, core, depth in [
        (2, Partition(), 3),
        (2, Partition([1]), 2),
        (2, Partition([2, 1]), 2),
        (3, Partition(), 2),
        (3, Partition([1, 1]), 1),
        (4, Partition([2]), 1),
    ]:
        basis = weight_basis(WeightLabel(core, depth, r))
        polys = [reduced_schur(lam, r) for lam in basis]
        assert linear_rank(polys) == len(polys)


def test_r_core_partitions():
    assert r_core_partitions(2, 6) == [
        Partition(),
        Partition([1]),
        Partition([2, 1]),
        Partition([3, 2, 1]),
    ]
    threes = r_core_partitions(3, 4)
    assert Partition([3, 1]) in threes and Partition([2, 1, 1]) in threes
    assert Partition([3]) not in threes
    for r in (2, 3, 4):
        for lam in r_core_partitions(r, 6):
            cq = r_decompose(lam, r)
            assert cq.core == lam and all(not q for q in cq.quotient)
