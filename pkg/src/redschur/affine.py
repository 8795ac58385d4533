"""Weight bookkeeping for the basic-set basis.

Basic-set partitions (empty first quotient component) are graded by their
r-core together with the total quotient size n ("depth"); all partitions
sharing both land in the same weight space, whose dimension is the
coefficient of q^n in 1/phi(q)^(r-1).
"""

from dataclasses import dataclass

from .maya import CoreQuotient, is_r_core, r_compose, r_decompose
from .partition import Partition, partition_series, partition_tuples, partitions_of, series_mul


@dataclass(frozen=True)
class WeightLabel:
    """(r-core, depth) label of a weight space."""

    core: Partition
    depth: int
    r: int

    def to_dict(self):
        return {"r": self.r, "core": list(self.core), "depth": self.depth}


def weight_of(lam, r: int) -> WeightLabel:
    """The weight label of a basic-set partition; rejects anything whose
    first quotient component is nonempty."""
    lam = Partition(lam)
    cq = r_decompose(lam, r)
    if cq.quotient[0]:
        raise ValueError(f"{lam!r} is not in the basic set for r = {r}")
    return WeightLabel(cq.core, sum(q.size for q in cq.quotient[1:]), r)


def weight_basis(label: WeightLabel):
    """All basic-set partitions with the given core and depth, built by
    composing every quotient tuple (empty, q_1, ..., q_{r-1}) of total size
    `depth` onto the core.  Largest partition first."""
    r = label.r
    if not is_r_core(label.core, r):
        raise ValueError(f"{label.core!r} is not an r-core for r = {r}")
    if label.depth < 0:
        raise ValueError("depth must be >= 0")
    out = [
        r_compose(CoreQuotient(label.core, (Partition(),) + tuple(quot), 1, r))
        for quot in partition_tuples(label.depth, r - 1)
    ]
    out.sort(reverse=True)
    return out


def multiplicity_series(r: int, max_n: int):
    """Coefficients 0..max_n of 1/phi(q)^(r-1): the common dimension of the
    depth-n weight spaces, whatever the core."""
    if r < 2:
        raise ValueError("modulus must be >= 2")
    series = [1] + [0] * max_n
    inv = partition_series(max_n)
    for _ in range(r - 1):
        series = series_mul(series, inv, max_n)
    return series


def r_core_partitions(r: int, max_size: int):
    """Every r-core of size <= max_size, by filtering all partitions."""
    return [
        lam
        for n in range(max_size + 1)
        for lam in partitions_of(n)
        if is_r_core(lam, r)
    ]
