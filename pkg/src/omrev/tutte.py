"""Tutte polynomial of a small matroid by corank-nullity subset expansion.

t(M; x, y) = sum over S subset of E of (x-1)^(r(E)-r(S)) * (y-1)^(|S|-r(S)).

The sum is accumulated exactly in the (x-1, y-1) basis over all 2^n subsets
and converted to monomial coefficients with binomial expansion; everything
is integer arithmetic.  Subset ranks come from a greedy oracle driven by
circuit supports alone, memoized across the subset lattice through the
prefix property of the greedy scan (dropping the top element of S leaves
the greedy decisions on the rest unchanged).
"""

from __future__ import annotations

from math import comb

from .core import _greedy_rank, _mask_of


def rank(M, S=None) -> int:
    """Matroid rank of a subset of the ground set.

    S may be a bitmask, an iterable of elements, or None for all of E.
    Greedy: scan S in ground order, keep e while no circuit support fits
    inside the kept set plus e.
    """
    if S is None:
        mask = M.ground_mask
    elif isinstance(S, int):
        mask = S
    else:
        mask = _mask_of(S)
    if mask < 0 or mask & ~M.ground_mask:
        raise ValueError("subset %r leaves the ground set of %s" % (S, M.name))
    return _greedy_rank([s for s, _, _ in M.circuit_data], mask)


class TuttePolynomial:
    """Integer polynomial t(x, y); coeffs[i][j] is the x^i y^j coefficient.

    Rows run over x-degree 0..rank, columns over y-degree 0..nullity.
    Coefficients of a matroid Tutte polynomial are nonnegative and the
    basis count t(1,1) is at least 1; both are enforced here.
    """

    def __init__(self, rank, coeffs):
        self.rank = int(rank)
        self.coeffs = tuple(tuple(int(c) for c in row) for row in coeffs)
        if len(self.coeffs) != self.rank + 1:
            raise ValueError("need one coefficient row per x-degree 0..rank")
        width = len(self.coeffs[0]) if self.coeffs else 0
        if any(len(row) != width for row in self.coeffs):
            raise ValueError("ragged coefficient table")
        if any(c < 0 for row in self.coeffs for c in row):
            raise ValueError("Tutte coefficients must be nonnegative")
        if self.evaluate(1, 1) < 1:
            raise ValueError("t(1,1) must be at least 1 (every matroid has a basis)")

    @property
    def nullity(self) -> int:
        return len(self.coeffs[0]) - 1

    def evaluate(self, x: int, y: int) -> int:
        total = 0
        xp = 1
        for row in self.coeffs:
            yp = xp
            for c in row:
                total += c * yp
                yp *= y
            xp *= x
        return total

    def __eq__(self, other):
        if not isinstance(other, TuttePolynomial):
            return NotImplemented
        return self.rank == other.rank and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.rank, self.coeffs))

    def __str__(self):
        terms = []
        for i in range(self.rank, -1, -1):
            for j, c in enumerate(self.coeffs[i]):
                if not c:
                    continue
                piece = "" if c == 1 and (i or j) else str(c)
                if i:
                    piece += "x" if i == 1 else "x^%d" % i
                if j:
                    piece += "y" if j == 1 else "y^%d" % j
                terms.append(piece)
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return "TuttePolynomial(rank=%d, %s)" % (self.rank, self)

    def to_json_dict(self):
        return {"rank": self.rank, "coeffs": [list(row) for row in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data):
        return cls(data["rank"], data["coeffs"])


def _subset_greedy(M):
    """Greedy independent-set mask for every subset word, by the prefix property."""
    n = M.n
    by_top = [[] for _ in range(n)]
    for supp, _, _ in M.circuit_data:
        by_top[supp.bit_length() - 1].append(supp)
    greedy = [0] * (1 << n)
    for S in range(1, 1 << n):
        top = 1 << (S.bit_length() - 1)
        prev = greedy[S ^ top]
        cand = prev | top
        for c in by_top[top.bit_length() - 1]:
            if c & cand == c:
                cand = prev
                break
        greedy[S] = cand
    return greedy


def tutte_polynomial(M) -> TuttePolynomial:
    """Exact Tutte polynomial of M by the 2^n corank-nullity sum."""
    n, r = M.n, M.rank
    nul = n - r
    cn = [[0] * (nul + 1) for _ in range(r + 1)]
    greedy = _subset_greedy(M)
    for S in range(1 << n):
        rs = greedy[S].bit_count()
        cn[r - rs][S.bit_count() - rs] += 1
    assert greedy[M.ground_mask].bit_count() == r, "stored rank disagrees with the oracle"
    coeffs = [[0] * (nul + 1) for _ in range(r + 1)]
    for i in range(r + 1):
        for j in range(nul + 1):
            total = 0
            for a in range(i, r + 1):
                row = cn[a]
                ca = comb(a, i) * (-1) ** (a - i)
                for b in range(j, nul + 1):
                    if row[b]:
                        total += row[b] * ca * comb(b, j) * (-1) ** (b - j)
            coeffs[i][j] = total
    return TuttePolynomial(r, coeffs)


def evaluate(T: TuttePolynomial, x: int, y: int) -> int:
    """Exact integer evaluation of a Tutte polynomial."""
    return T.evaluate(x, y)


# the five evaluation points tied to reversal-class and minimality counts:
# (1,1) circuit-cocircuit, (1,2) cocircuit, (2,1) circuit,
# (1,0) acyclic cocircuit, (0,1) totally cyclic circuit
EVAL_POINTS = ((1, 1), (1, 2), (2, 1), (1, 0), (0, 1))


def evaluations(T: TuttePolynomial):
    """The five standard evaluations as a tuple, in EVAL_POINTS order."""
    return tuple(T.evaluate(x, y) for x, y in EVAL_POINTS)
