"""Littlewood-Richardson coefficients by direct tableau counting.

LR^nu_{lam,mu} counts semistandard fillings of the skew shape nu/lam with
content mu whose reverse reading word (right to left along rows, top row
first) is a lattice word.  Cells are filled in exactly that reading order,
so the lattice and content constraints can be checked incrementally and
dead branches are abandoned early.
"""

from functools import lru_cache

from .partition import Partition, partitions_of


@lru_cache(maxsize=None)
def _count(nu, lam, mu):
    cells = []
    for i in range(len(nu)):
        inner = lam[i] if i < len(lam) else 0
        cells.extend((i, c) for c in range(nu[i] - 1, inner - 1, -1))

    vals = {}
    counts = [0] * (len(mu) + 1)

    def place(k):
        if k == len(cells):
            return 1
        i, c = cells[k]
        lo = vals[(i - 1, c)] + 1 if (i - 1, c) in vals else 1
        hi = vals.get((i, c + 1), len(mu))
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            vals[(i, c)] = v
            counts[v] += 1
            total += place(k + 1)
            counts[v] -= 1
            del vals[(i, c)]
        return total

    return place(0)


def lr_coefficient(nu, lam, mu) -> int:
    """The multiplicity of S_nu in S_lam * S_mu."""
    nu, lam, mu = Partition(nu), Partition(lam), Partition(mu)
    if nu.size != lam.size + mu.size or not nu.contains(lam):
        return 0
    return _count(nu, lam, mu)


def lr_multi(outer, inners) -> int:
    """Multi-factor coefficient: the multiplicity of S_outer in the product
    S_{inners[0]} * S_{inners[1]} * ... computed by chaining pairwise
    expansions through intermediate shapes."""
    outer = Partition(outer)
    inners = [Partition(x) for x in inners]
    if not inners:
        raise ValueError("need at least one inner shape")
    current = {inners[0]: 1} if outer.contains(inners[0]) else {}
    for lam in inners[1:]:
        nxt = {}
        for sigma, mult in current.items():
            for nu, c in schur_product_expand(sigma, lam):
                if outer.contains(nu):
                    nxt[nu] = nxt.get(nu, 0) + mult * c
        current = nxt
    return current.get(outer, 0)


def schur_product_expand(lam, mu):
    """S_lam * S_mu as a list of (nu, coefficient), nonzero terms only,
    following the partition order on nu."""
    lam, mu = Partition(lam), Partition(mu)
    out = []
    for nu in partitions_of(lam.size + mu.size):
        c = lr_coefficient(nu, lam, mu)
        if c:
            out.append((nu, c))
    return out
