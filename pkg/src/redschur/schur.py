"""Symmetric-group characters and Schur functions in power-sum coordinates.

With p_j = j*t_j the Schur function of lam is the polynomial

    S_lam(t) = sum over cycle types nu of |lam| of chi^lam(nu) * t^nu / nu!

where t^nu = prod t_j^{nu_j} over the multiplicities nu_j of nu and
nu! = prod nu_j!.  Characters come from the border-strip recursion.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import maya
from .partition import Partition, border_strip_removals, partitions_of
from .polyring import Monomial, TPolynomial, reduce_r


class CycleType:
    """A conjugacy class of a symmetric group: multiplicity map j -> nu_j."""

    __slots__ = ("counts",)

    def __init__(self, counts):
        if isinstance(counts, dict):
            counts = counts.items()
        acc = {}
        for j, m in counts:
            j, m = int(j), int(m)
            if j < 1 or m < 0:
                raise ValueError("cycle lengths start at 1, multiplicities at 0")
            if m:
                acc[j] = acc.get(j, 0) + m
        self.counts = tuple(sorted(acc.items()))

    @classmethod
    def from_parts(cls, parts):
        acc = {}
        for p in parts:
            acc[p] = acc.get(p, 0) + 1
        return cls(acc)

    @property
    def n(self) -> int:
        return sum(j * m for j, m in self.counts)

    def parts(self):
        """The class as a partition, largest cycle first."""
        out = []
        for j, m in reversed(self.counts):
            out.extend([j] * m)
        return Partition(out)

    def z(self) -> int:
        """Order of the centralizer: prod j^{nu_j} * nu_j!."""
        out = 1
        for j, m in self.counts:
            out *= j**m * factorial(m)
        return out

    def __eq__(self, other):
        return isinstance(other, CycleType) and self.counts == other.counts

    def __hash__(self):
        return hash(self.counts)

    def __repr__(self):
        return f"CycleType({dict(self.counts)})"


def cycle_types(n: int):
    """All cycle types of S_n, following the partition order."""
    return [CycleType.from_parts(p) for p in partitions_of(n)]


@lru_cache(maxsize=None)
def _chi(lam_parts, nu_parts):
    # nu_parts is weakly decreasing; peel the largest part first
    if not nu_parts:
        return 1
    j, rest = nu_parts[0], nu_parts[1:]
    total = 0
    for removal in border_strip_removals(Partition(lam_parts), j):
        term = _chi(tuple(removal.result), rest)
        total += -term if removal.height % 2 else term
    return total


def mn_character(lam: Partition, nu: CycleType) -> int:
    """The irreducible character chi^lam evaluated on the class nu."""
    lam = Partition(lam)
    if lam.size != nu.n:
        raise ValueError(f"|lam| = {lam.size} but nu is a class of S_{nu.n}")
    return _chi(tuple(lam), tuple(nu.parts()))


@lru_cache(maxsize=None)
def _schur_in_t(lam):
    terms = []
    for nu in cycle_types(lam.size):
        denom = 1
        for _, m in nu.counts:
            denom *= factorial(m)
        terms.append((Monomial(nu.counts), Fraction(mn_character(lam, nu), denom)))
    return TPolynomial(terms)


def schur_in_t(lam) -> TPolynomial:
    """The Schur function of lam as a polynomial in t_1, t_2, ...

    Homogeneous of degree |lam|; S_empty = 1.
    """
    return _schur_in_t(Partition(lam))


@lru_cache(maxsize=None)
def _reduced(lam, r):
    return reduce_r(_schur_in_t(lam), r)


def reduced_schur(lam, r: int) -> TPolynomial:
    """schur_in_t with every t_{jr} set to zero."""
    if r < 2:
        raise ValueError("modulus must be >= 2")
    return _reduced(Partition(lam), r)


def schur_times_power_sum(lam, j: int):
    """Expand p_j * S_lam as a signed sum of Schur functions.

    Adding j to a beta number either creates a collision (dropped) or a new
    strictly decreasing sequence whose sorting sign gives the coefficient:
    p_j S_lam = sum (-1)^height S_{lam + j-strip} over border-strip
    additions.  Displaying len(lam) + j beads is enough: a bump anywhere in
    the implied tail always collides.
    """
    lam = Partition(lam)
    if j < 1:
        raise ValueError("power-sum index must be >= 1")
    beads = len(lam) + j
    md = maya.from_partition_padded(lam, beads)
    out = []
    for i in range(1, beads + 1):
        bumped, sign = maya.sort_sign(md.add_at(i, j))
        if sign:
            out.append((bumped.partition(), sign))
    return out
