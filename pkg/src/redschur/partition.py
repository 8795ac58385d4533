"""Partitions, Young-diagram combinatorics, and partition generating functions."""

from functools import lru_cache
from typing import Iterable, NamedTuple


class Partition(tuple):
    """A partition: weakly decreasing tuple of positive integers.

    The empty partition is ``Partition()``.  Trailing zeros in the input are
    discarded; any other violation of "weakly decreasing, positive" is
    rejected.  Instances are immutable and hashable.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts are not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self):
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (1-indexed), zero beyond the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        """The transposed diagram: row j of the result counts parts >= j."""
        if not self:
            return self
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def contains(self, other: "Partition") -> bool:
        """Cellwise containment of diagrams."""
        return len(other) <= len(self) and all(s >= o for s, o in zip(self, other))

    def __repr__(self):
        return f"Partition({list(self)})"


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


class BorderStripRemoval(NamedTuple):
    """One way of removing a connected border strip: the smaller diagram and
    the strip's height (rows spanned minus one)."""

    result: Partition
    height: int


def border_strip_removals(lam: Partition, length: int):
    """All removals of a connected border strip of `length` cells from `lam`.

    A removable strip of a given length corresponds to a cell whose hook
    length equals it; since hook lengths strictly decrease along a row there
    is at most one strip starting in each row.  Removals are returned in
    ascending order of the strip's topmost row.
    """
    if length < 1:
        raise ValueError("strip length must be >= 1")
    out = []
    conj = lam.conjugate()
    for i in range(1, len(lam) + 1):
        for j in range(1, lam.part(i) + 1):
            arm = lam.part(i) - j
            leg = conj.part(j) - i
            if arm + leg + 1 != length:
                continue
            rows = list(lam)
            for k in range(i, i + leg):
                rows[k - 1] = lam.part(k + 1) - 1
            rows[i + leg - 1] = j - 1
            out.append(BorderStripRemoval(Partition(rows), leg))
            break
    return out


@lru_cache(maxsize=None)
def _bounded(n: int, maxpart: int):
    if n == 0:
        return ((),)
    acc = []
    for first in range(min(n, maxpart), 0, -1):
        acc.extend((first,) + rest for rest in _bounded(n - first, first))
    return tuple(acc)


def partitions_of(n: int):
    """All partitions of n, each once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return [Partition(p) for p in _bounded(n, n)]


def partition_tuples(total: int, slots: int):
    """All `slots`-tuples of partitions with sizes summing to `total`,
    in a fixed deterministic order."""
    if slots == 0:
        return [()] if total == 0 else []
    out = []
    for a in range(total + 1):
        for first in partitions_of(a):
            out.extend((first,) + rest for rest in partition_tuples(total - a, slots - 1))
    return out


# -- q-series helpers (integer coefficient lists c[0..n]) --------------------

def series_mul(a, b, n: int):
    """Product of two truncated series, kept to order q^n."""
    out = [0] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai:
            for j, bj in enumerate(b[: n + 1 - i]):
                out[i + j] += ai * bj
    return out


def euler_series(n: int):
    """Coefficients of prod_{j>=1} (1 - q^j) up to q^n."""
    c = [0] * (n + 1)
    c[0] = 1
    for j in range(1, n + 1):
        for d in range(n, j - 1, -1):
            c[d] -= c[d - j]
    return c


def partition_series(n: int):
    """Partition numbers p(0..n) via formal inversion of the Euler product.

    Computed purely by series arithmetic, so it is independent of
    partitions_of and usable as an oracle against it.
    """
    a = euler_series(n)
    b = [0] * (n + 1)
    b[0] = 1
    for k in range(1, n + 1):
        b[k] = -sum(a[i] * b[k - i] for i in range(1, k + 1))
    return b
