"""Generalized Maya diagrams and the abacus core/quotient/sign decomposition.

A partition lam with at most N parts is encoded by the strictly decreasing
integer sequence beta_i = lam_i + N - i (i = 1..N), continued by
-1, -2, -3, ... below.  Distributing the beta numbers over r runners by
residue mod r yields the r-quotient; pushing every bead down its runner as
far as it goes yields the r-core; and the parity of that rearrangement is
the r-sign delta_r.

Convention for delta_r used throughout: delta_r(lam) is the parity of the
number of bead transpositions needed to compact the runners, computed as the
inversion count between the initial (strictly decreasing) bead sequence and
the beads' final resting positions.  Equivalently it is (-1)^(sum of leg
lengths) over any sequence of r-strip removals down to the r-core.  This
quantity only depends on lam and r, not on the number of beads displayed.
"""

from dataclasses import dataclass

from .partition import Partition, border_strip_removals


class MayaDiagram:
    """An integer sequence that is eventually "step down by one".

    Entries are 1-indexed.  Only a finite head is stored; entry(i) beyond the
    head continues head[-1] - 1, head[-1] - 2, ...  An empty head denotes the
    vacuum sequence -1, -2, -3, ...  The stored head is trimmed to a canonical
    minimal form so equal sequences compare equal.
    """

    __slots__ = ("head",)

    def __init__(self, head=()):
        head = tuple(int(a) for a in head)
        m = len(head)
        while m and head[m - 1] == (head[m - 2] if m >= 2 else 0) - 1:
            m -= 1
        self.head = head[:m]

    def entry(self, i: int) -> int:
        if i < 1:
            raise IndexError("entries are 1-indexed")
        if i <= len(self.head):
            return self.head[i - 1]
        base = self.head[-1] if self.head else 0
        return base - (i - len(self.head))

    def entries(self, n: int):
        return tuple(self.entry(i) for i in range(1, n + 1))

    def add_at(self, i: int, amount: int) -> "MayaDiagram":
        """A new diagram with `amount` added to entry i, all others kept."""
        # materialize one entry past i so the implied tail stays correct
        head = list(self.entries(max(i + 1, len(self.head))))
        head[i - 1] += amount
        return MayaDiagram(head)

    def is_strictly_decreasing(self) -> bool:
        return all(a > b for a, b in zip(self.head, self.head[1:]))

    def partition(self) -> Partition:
        """The partition lam_i = entry(i) - entry(n) - (n - i) read off a
        strictly decreasing diagram."""
        n = len(self.head)
        if n == 0:
            return Partition()
        last = self.head[-1]
        return Partition(self.head[i] - last - (n - 1 - i) for i in range(n))

    def __eq__(self, other):
        return isinstance(other, MayaDiagram) and self.head == other.head

    def __hash__(self):
        return hash(self.head)

    def __repr__(self):
        shown = ", ".join(str(a) for a in self.entries(len(self.head) + 2))
        return f"MayaDiagram({shown}, ...)"


def _bead_count(nparts: int, r: int) -> int:
    """Least multiple of r that is >= nparts."""
    return -(-nparts // r) * r


def from_partition(lam: Partition, r: int) -> MayaDiagram:
    """Canonical Maya diagram of lam for modulus r: N beads with N the least
    multiple of r covering all parts."""
    return from_partition_padded(lam, _bead_count(len(lam), r))


def from_partition_padded(lam: Partition, beads: int) -> MayaDiagram:
    """Maya diagram of lam displayed with a prescribed number of beads."""
    if beads < len(lam):
        raise ValueError("not enough beads for the partition")
    head = [lam.part(i) + beads - i for i in range(1, beads + 1)]
    head.append(-1)
    return MayaDiagram(head)


def sort_sign(md: MayaDiagram):
    """Sort a Maya diagram into decreasing order.

    Returns (sorted diagram, sign of the sorting permutation); the sign is 0
    when two entries coincide.  All disorder lives in the stored head plus
    the stretch of implied tail that interleaves with it, so only a finite
    window is examined.
    """
    window = list(md.head)
    if window:
        lo = min(window)
        t = window[-1] - 1
        while t >= lo:
            window.append(t)
            t -= 1
    if len(set(window)) < len(window):
        return md, 0
    inv = sum(
        1
        for i in range(len(window))
        for j in range(i + 1, len(window))
        if window[i] < window[j]
    )
    return MayaDiagram(sorted(window, reverse=True)), -1 if inv % 2 else 1


@dataclass(frozen=True)
class CoreQuotient:
    """The r-core, r-quotient and r-sign of a partition."""

    core: Partition
    quotient: tuple
    sign: int
    r: int

    def to_dict(self):
        return {
            "r": self.r,
            "core": list(self.core),
            "quotient": [list(q) for q in self.quotient],
            "sign": self.sign,
        }


def _partition_from_beta(values) -> Partition:
    """Partition read off a strictly decreasing tuple of beta numbers."""
    m = len(values)
    return Partition(values[i] - (m - 1 - i) for i in range(m))


def r_decompose(lam: Partition, r: int) -> CoreQuotient:
    """Split lam into (r-core, r-quotient, r-sign) via the abacus."""
    if r < 2:
        raise ValueError("modulus must be >= 2")
    n_beads = _bead_count(len(lam), r)
    beta = [lam.part(i) + n_beads - i for i in range(1, n_beads + 1)]

    runners = {k: [] for k in range(r)}
    for b in beta:
        runners[b % r].append((b - b % r) // r)

    quotient = tuple(_partition_from_beta(runners[k]) for k in range(r))

    core_beta = sorted(
        (k + r * t for k in range(r) for t in range(len(runners[k]))),
        reverse=True,
    )
    core = _partition_from_beta(core_beta)

    # final resting position of each bead: slot rank-1 beads deepest on
    # their runner, so bead of rank s (1 = largest) lands at k + r*(n_k - s)
    seen = {k: 0 for k in range(r)}
    final = []
    for b in beta:
        k = b % r
        seen[k] += 1
        final.append(k + r * (len(runners[k]) - seen[k]))
    inv = sum(
        1
        for i in range(len(final))
        for j in range(i + 1, len(final))
        if final[i] < final[j]
    )
    sign = -1 if inv % 2 else 1

    return CoreQuotient(core, quotient, sign, r)


def is_r_core(lam: Partition, r: int) -> bool:
    """True when no border strip of r cells can be removed."""
    return not border_strip_removals(lam, r)


def r_compose(cq: CoreQuotient) -> Partition:
    """Rebuild the partition with the given r-core and r-quotient.

    Inverse of r_decompose up to sign; rejects a core that is not actually
    an r-core and a quotient of the wrong length.
    """
    r = cq.r
    if r < 2:
        raise ValueError("modulus must be >= 2")
    if len(cq.quotient) != r:
        raise ValueError(f"quotient must have {r} components")
    if not is_r_core(cq.core, r):
        raise ValueError(f"{cq.core!r} admits an {r}-strip removal, not a core")

    extra = max((len(q) for q in cq.quotient), default=0)
    n_beads = _bead_count(len(cq.core), r) + r * extra
    core_beta = [cq.core.part(i) + n_beads - i for i in range(1, n_beads + 1)]
    counts = {k: 0 for k in range(r)}
    for b in core_beta:
        counts[b % r] += 1

    beta = []
    for k in range(r):
        q = cq.quotient[k]
        nk = counts[k]
        beta.extend(k + r * (q.part(s) + nk - s) for s in range(1, nk + 1))
    return _partition_from_beta(sorted(beta, reverse=True))


def delta2_column_hooks(lam: Partition) -> int:
    """Sign from greedily stripping dominoes, lowest-placed strip first.

    Repeatedly removes the 2-cell border strip whose bottom cell sits in the
    highest-numbered row and accumulates (-1)^height.  For partitions with
    empty 2-core this is a direct, abacus-free route to delta_2.
    """
    q = 0
    cur = lam
    while True:
        removals = border_strip_removals(cur, 2)
        if not removals:
            return -1 if q % 2 else 1

        def bottom_row(after, before=cur):
            rows = max(len(before), len(after))
            return max(i for i in range(1, rows + 1) if before.part(i) != after.part(i))

        pick = max(removals, key=lambda br: bottom_row(br.result))
        q += pick.height
        cur = pick.result
