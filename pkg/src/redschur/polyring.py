"""Sparse polynomials in t_1, t_2, ... with exact rational coefficients.

The grading gives t_j degree j, so symmetric functions written in the
power-sum coordinates p_j = j*t_j live here with their usual degree.
Coefficients are fractions.Fraction throughout; nothing is ever floated.
"""

from fractions import Fraction


class Monomial:
    """A product of t_j powers, stored as ((j, e), ...) sorted by j, e >= 1."""

    __slots__ = ("exps",)

    def __init__(self, exps=()):
        if isinstance(exps, dict):
            exps = exps.items()
        acc = {}
        for j, e in exps:
            j, e = int(j), int(e)
            if j < 1:
                raise ValueError("variable indices start at 1")
            if e:
                acc[j] = acc.get(j, 0) + e
        if any(e < 0 for e in acc.values()):
            raise ValueError("exponents must be nonnegative")
        self.exps = tuple(sorted((j, e) for j, e in acc.items() if e))

    @property
    def degree(self) -> int:
        return sum(j * e for j, e in self.exps)

    def exponent(self, j: int) -> int:
        for k, e in self.exps:
            if k == j:
                return e
        return 0

    def __mul__(self, other):
        return Monomial(self.exps + other.exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def sort_key(self):
        # graded order; ties broken so that higher powers of earlier
        # variables come first (t1^2 before t2 in degree 2)
        return (self.degree, tuple((j, -e) for j, e in self.exps))

    def __repr__(self):
        if not self.exps:
            return "1"
        return "*".join(f"t{j}" + (f"^{e}" if e > 1 else "") for j, e in self.exps)


_ONE = Monomial()


class TPolynomial:
    """A finite rational linear combination of Monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        acc = {}
        for mono, coeff in terms:
            c = acc.get(mono, 0) + Fraction(coeff)
            if c:
                acc[mono] = c
            elif mono in acc:
                del acc[mono]
        self._terms = acc

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def constant(cls, c):
        return cls({_ONE: Fraction(c)})

    @classmethod
    def variable(cls, j: int):
        return cls({Monomial({j: 1}): Fraction(1)})

    # -- inspection -----------------------------------------------------------

    def terms(self):
        """(monomial, coefficient) pairs in the canonical graded order."""
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key())

    def monomials(self):
        return set(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; the zero polynomial gets -1."""
        return max((m.degree for m in self._terms), default=-1)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPolynomial.constant(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        res = TPolynomial.zero()
        res._terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = TPolynomial.zero()
        res._terms = {m: -c for m, c in self._terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            res = TPolynomial.zero()
            if c:
                res._terms = {m: a * c for m, a in self._terms.items()}
            return res
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        res = TPolynomial.zero()
        res._terms = out
        return res

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPolynomial.constant(other)
        return isinstance(other, TPolynomial) and self._terms == other._terms

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for mono, c in self.terms():
            body = repr(mono)
            if body == "1":
                frag = str(abs(c))
            elif abs(c) == 1:
                frag = body
            else:
                frag = f"{abs(c)}*{body}"
            bits.append(("- " if c < 0 else "+ ") + frag)
        head = bits[0][2:] if bits[0].startswith("+ ") else "-" + bits[0][2:]
        return head + ("" if len(bits) == 1 else " " + " ".join(bits[1:]))

    # -- serialization -----------------------------------------------------

    def to_dict(self):
        return [
            {
                "coeff": f"{c.numerator}/{c.denominator}",
                "monomial": {str(j): e for j, e in mono.exps},
            }
            for mono, c in self.terms()
        ]

    @classmethod
    def from_dict(cls, data):
        return cls(
            (Monomial({int(j): e for j, e in item["monomial"].items()}), Fraction(item["coeff"]))
            for item in data
        )


def reduce_r(p: TPolynomial, r: int) -> TPolynomial:
    """Kill every term involving any variable t_{jr}: the image of p in the
    quotient by the ideal (t_r, t_2r, ...)."""
    if r < 1:
        raise ValueError("modulus must be >= 1")
    return TPolynomial(
        {m: c for m, c in p._terms.items() if all(j % r for j, _ in m.exps)}
    )


def omega(p: TPolynomial) -> TPolynomial:
    """The involution t_j -> (-1)^(j-1) t_j."""
    out = {}
    for m, c in p._terms.items():
        flips = sum(e for j, e in m.exps if j % 2 == 0)
        out[m] = -c if flips % 2 else c
    return TPolynomial(out)


def graded_component(p: TPolynomial, n: int) -> TPolynomial:
    """The degree-n homogeneous part of p."""
    return TPolynomial({m: c for m, c in p._terms.items() if m.degree == n})


def linear_rank(polys) -> int:
    """Rank of the span of a family of polynomials, by exact elimination."""
    polys = list(polys)
    monos = sorted({m for p in polys for m in p.monomials()}, key=Monomial.sort_key)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(monos)
        for m, c in p._terms.items():
            row[index[m]] = c
        rows.append(row)

    rank = 0
    col = 0
    while rank < len(rows) and col < len(monos):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / lead
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank
