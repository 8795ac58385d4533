"""Decomposing reduced Schur functions over the basic set.

Setting t_r = t_2r = ... = 0 collapses the Schur basis: the surviving
functions are spanned by those S^(r)_mu whose r-quotient has empty first
component (the basic set).  The coefficients are signed sums of products of
Littlewood-Richardson numbers assembled from the r-quotients:

    S^(r)_lam = (-1)^|lam[0]| delta(lam) *
        sum_mu delta(mu) * [ sum over (nu_1..nu_{r-1})
            LR^{lam[0]'}_{nu_1,...,nu_{r-1}} *
            prod_k LR^{mu[k]}_{nu_k, lam[k]} ] * S^(r)_mu

where mu runs over partitions of |lam| with the same r-core as lam and
mu[0] empty, lam[k] / mu[k] are the r-quotient components, lam[0]' is the
conjugate, and delta is the r-sign.
"""

from dataclasses import dataclass
from itertools import product

from .lr import lr_coefficient, lr_multi
from .maya import CoreQuotient, r_compose, r_decompose
from .partition import (
    Partition,
    euler_series,
    partition_series,
    partition_tuples,
    partitions_of,
    series_mul,
)
from .polyring import TPolynomial, linear_rank
from .schur import reduced_schur


@dataclass(frozen=True)
class Decomposition:
    """A reduced Schur function written over the basic set."""

    source: Partition
    r: int
    terms: tuple  # ((Partition, int), ...)

    def to_dict(self):
        return {
            "r": self.r,
            "lambda": list(self.source),
            "terms": [{"mu": list(mu), "coeff": c} for mu, c in self.terms],
        }


def basic_set(r: int, n: int):
    """Partitions of n whose r-quotient has empty first component, in the
    partition order."""
    return [lam for lam in partitions_of(n) if not r_decompose(lam, r).quotient[0]]


def decompose(lam, r: int) -> Decomposition:
    """Write S^(r)_lam as an integer combination of basic-set functions."""
    lam = Partition(lam)
    cq = r_decompose(lam, r)
    lam0 = cq.quotient[0]
    if not lam0:
        return Decomposition(lam, r, ((lam, 1),))

    lam0c = lam0.conjugate()
    weight = lam0.size + sum(q.size for q in cq.quotient[1:])
    prefactor = cq.sign if lam0.size % 2 == 0 else -cq.sign

    terms = []
    for quot in partition_tuples(weight, r - 1):
        # nu_k must fill the size gap |mu[k]| - |lam[k]|
        gaps = [quot[k].size - cq.quotient[k + 1].size for k in range(r - 1)]
        if any(g < 0 for g in gaps) or sum(gaps) != lam0.size:
            continue
        total = 0
        for nus in product(*(partitions_of(g) for g in gaps)):
            factor = 1
            for k in range(r - 1):
                factor *= lr_coefficient(quot[k], nus[k], cq.quotient[k + 1])
                if not factor:
                    break
            if factor:
                total += factor * lr_multi(lam0c, nus)
        if not total:
            continue
        mu = r_compose(CoreQuotient(cq.core, (Partition(),) + tuple(quot), 1, r))
        terms.append((mu, prefactor * r_decompose(mu, r).sign * total))

    terms.sort(key=lambda mc: mc[0], reverse=True)
    return Decomposition(lam, r, tuple(terms))


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of checking a decomposition against actual polynomials."""

    ok: bool
    witness: TPolynomial | None
    decomposition: Decomposition

    def __bool__(self):
        return self.ok


def verify_theorem(lam, r: int) -> VerificationResult:
    """Recompute both sides of the decomposition of S^(r)_lam as honest
    polynomials and compare; on mismatch the witness is the difference."""
    dec = decompose(lam, r)
    diff = reduced_schur(dec.source, r)
    for mu, c in dec.terms:
        diff = diff - c * reduced_schur(mu, r)
    return VerificationResult(diff.is_zero, None if diff.is_zero else diff, dec)


def count_no_multiples(r: int, n: int) -> int:
    """Partitions of n with no part divisible by r, counted one by one."""
    return sum(1 for lam in partitions_of(n) if all(p % r for p in lam))


def basic_series(r: int, n: int):
    """Coefficients 0..n of phi(q^r)/phi(q), with phi the Euler product."""
    phi = euler_series(n)
    phir = [phi[m // r] if m % r == 0 else 0 for m in range(n + 1)]
    return series_mul(phir, partition_series(n), n)


def counting_check(r: int, max_n: int) -> bool:
    """Three routes to the size of the basic set must agree for n <= max_n:
    direct enumeration, restricted partition counting, and the q-series."""
    series = basic_series(r, max_n)
    return all(
        len(basic_set(r, n)) == series[n] == count_no_multiples(r, n)
        for n in range(max_n + 1)
    )


def basis_rank_check(r: int, n: int) -> bool:
    """The reduced Schur functions of the basic set in degree n are linearly
    independent, so they really form a basis of the degree-n component."""
    polys = [reduced_schur(lam, r) for lam in basic_set(r, n)]
    expected = count_no_multiples(r, n)
    return len(polys) == expected and linear_rank(polys) == expected
