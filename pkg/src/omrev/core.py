"""Exact representation of small oriented matroids.

An oriented matroid on ground set {0, ..., n-1} is stored by its signed
circuits and signed cocircuits.  A signed set X is a pair of disjoint
element sets (X+, X-); each circuit or cocircuit is kept once, in the
canonical orientation that puts the minimum element of the support in the
positive part, and stands for the pair {X, -X}.

A reorientation is a plain int A with bit e set iff element e is reversed.
A stored set X counts as positive in -_A M exactly when A picks out one of
its two sign parts over the support, i.e. A & supp(X) is X- or X+.

Builders: an integer matrix (sign patterns of rational kernel vectors on
minimal dependent column sets), a directed graph (signed incidence matrix),
a uniform matroid U(r, n) (Vandermonde columns), or explicit signed-set
lists.  All arithmetic is exact rational; no floats anywhere.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

MAX_ELEMENTS = 20


class InvalidOrientedMatroid(ValueError):
    """Input data violates an oriented-matroid invariant."""


def _mask_of(elements):
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def _elements_of(mask):
    """Set bits of mask as an ascending element list."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class SignedSet:
    """A signed subset of the ground set: disjoint positive/negative parts.

    Instances are always canonical: the minimum element of the support sits
    in the positive part, so one object represents the pair {X, -X}.  Parts
    may be given as element iterables or directly as bitmasks.
    """

    __slots__ = ("pos_mask", "neg_mask")

    def __init__(self, pos=(), neg=()):
        pos_mask = pos if isinstance(pos, int) else _mask_of(pos)
        neg_mask = neg if isinstance(neg, int) else _mask_of(neg)
        if pos_mask < 0 or neg_mask < 0:
            raise ValueError("element masks must be nonnegative")
        if pos_mask & neg_mask:
            raise ValueError("positive and negative parts overlap")
        supp = pos_mask | neg_mask
        if supp == 0:
            raise ValueError("signed set must be nonempty")
        if (supp & -supp) & neg_mask:
            pos_mask, neg_mask = neg_mask, pos_mask
        self.pos_mask = pos_mask
        self.neg_mask = neg_mask

    @property
    def support_mask(self) -> int:
        return self.pos_mask | self.neg_mask

    @property
    def pos(self) -> frozenset:
        return frozenset(_elements_of(self.pos_mask))

    @property
    def neg(self) -> frozenset:
        return frozenset(_elements_of(self.neg_mask))

    @property
    def support(self) -> frozenset:
        return frozenset(_elements_of(self.support_mask))

    @property
    def min_element(self) -> int:
        supp = self.support_mask
        return (supp & -supp).bit_length() - 1

    def sign(self, e: int) -> int:
        bit = 1 << e
        if self.pos_mask & bit:
            return 1
        if self.neg_mask & bit:
            return -1
        return 0

    def is_positive_in(self, A: int) -> bool:
        """True iff X or -X is all-positive after reversing the elements of A."""
        inter = A & self.support_mask
        return inter == self.neg_mask or inter == self.pos_mask

    def reoriented(self, A: int) -> "SignedSet":
        """Canonical form of this signed set with signs flipped on A."""
        pos = (self.pos_mask & ~A) | (self.neg_mask & A)
        neg = (self.neg_mask & ~A) | (self.pos_mask & A)
        return SignedSet(pos, neg)

    def sort_key(self):
        # storage order: supports as ascending element tuples, compared
        # lexicographically; distinct stored sets have distinct supports
        return tuple(_elements_of(self.support_mask))

    def __eq__(self, other):
        if not isinstance(other, SignedSet):
            return NotImplemented
        return self.pos_mask == other.pos_mask and self.neg_mask == other.neg_mask

    def __hash__(self):
        return hash((self.pos_mask, self.neg_mask))

    def __repr__(self):
        return "SignedSet(pos=%r, neg=%r)" % (
            _elements_of(self.pos_mask),
            _elements_of(self.neg_mask),
        )

    def to_json_dict(self):
        return {"pos": _elements_of(self.pos_mask), "neg": _elements_of(self.neg_mask)}


def _as_signed_set(obj) -> SignedSet:
    if isinstance(obj, SignedSet):
        return obj
    if isinstance(obj, dict):
        return SignedSet(obj.get("pos", ()), obj.get("neg", ()))
    pos, neg = obj
    return SignedSet(pos, neg)


def _greedy_rank(circuit_supports, subset_mask: int) -> int:
    """Greedy rank oracle: scan elements of the subset in ground order and
    keep e while no circuit support fits inside the kept set plus e."""
    kept = 0
    rest = subset_mask
    while rest:
        low = rest & -rest
        rest ^= low
        cand = kept | low
        for c in circuit_supports:
            if c & cand == c:
                break
        else:
            kept = cand
    return kept.bit_count()


class OrientedMatroid:
    """Signed circuits and cocircuits on ground set {0, ..., n-1}.

    Immutable after construction (an internal memo for derived partitions
    does not affect observable state, so concurrent read-only use is safe).
    Both lists are kept in storage order: sorted by support.
    """

    def __init__(self, n, rank, circuits, cocircuits, name=""):
        if not 0 <= n <= MAX_ELEMENTS:
            raise ValueError(
                "ground set too large: n=%d exceeds the hard cap %d" % (n, MAX_ELEMENTS)
            )
        self.n = n
        self.rank = rank
        self.circuits = tuple(sorted(circuits, key=SignedSet.sort_key))
        self.cocircuits = tuple(sorted(cocircuits, key=SignedSet.sort_key))
        self.name = name or "om"
        self.ground_mask = (1 << n) - 1
        for X in self.circuits + self.cocircuits:
            if X.support_mask & ~self.ground_mask:
                raise ValueError("signed set mentions an element outside 0..n-1")
        # flat mask triples for the hot enumeration loops
        self.circuit_data = tuple(
            (X.support_mask, X.pos_mask, X.neg_mask) for X in self.circuits
        )
        self.cocircuit_data = tuple(
            (X.support_mask, X.pos_mask, X.neg_mask) for X in self.cocircuits
        )
        self._cache = {}

    @property
    def loops_mask(self) -> int:
        m = 0
        for supp, _, _ in self.circuit_data:
            if supp & (supp - 1) == 0:
                m |= supp
        return m

    @property
    def coloops_mask(self) -> int:
        m = 0
        for supp, _, _ in self.cocircuit_data:
            if supp & (supp - 1) == 0:
                m |= supp
        return m

    @property
    def has_loops(self) -> bool:
        return self.loops_mask != 0

    @property
    def has_coloops(self) -> bool:
        return self.coloops_mask != 0

    def __eq__(self, other):
        if not isinstance(other, OrientedMatroid):
            return NotImplemented
        return (
            self.n == other.n
            and self.circuits == other.circuits
            and self.cocircuits == other.cocircuits
        )

    def __repr__(self):
        return "<OrientedMatroid %s: n=%d rank=%d, %d circuits, %d cocircuits>" % (
            self.name,
            self.n,
            self.rank,
            len(self.circuits),
            len(self.cocircuits),
        )


# ----------------------------------------------------------------------
# exact linear algebra over the rationals


def _row_reduce(rows, ncols):
    """Reduced row echelon form over Fraction.

    Returns (pivot column list, reduced nonzero rows).
    """
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        hit = None
        for i in range(r, len(work)):
            if work[i][c]:
                hit = i
                break
        if hit is None:
            continue
        work[r], work[hit] = work[hit], work[r]
        pivot = work[r][c]
        work[r] = [x / pivot for x in work[r]]
        row_r = work[r]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return pivots, work[:r]


def _primitive_int_vector(vec):
    """Scale a nonzero rational vector to coprime integers, sign preserved."""
    denom = reduce(math.lcm, (x.denominator for x in vec), 1)
    ints = [int(x * denom) for x in vec]
    g = reduce(math.gcd, ints)
    return [x // g for x in ints]


def _kernel_basis(rows, ncols):
    """Primitive integer basis of the rational kernel of an integer matrix."""
    pivots, red = _row_reduce(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(_primitive_int_vector(v))
    return basis


def _circuits_of_matrix(rows, n):
    """Signed circuits of the column matroid of an integer matrix.

    Column subsets are scanned in increasing size up to rank+1; a subset
    with no smaller circuit inside that turns out dependent is a circuit,
    and its sign pattern is the one-dimensional rational kernel of the
    chosen columns.
    """
    rank = len(_row_reduce(rows, n)[0])
    circuits = []
    supports = []
    for size in range(1, rank + 2):
        for combo in itertools.combinations(range(n), size):
            mask = _mask_of(combo)
            if any(s & mask == s for s in supports):
                continue
            sub = [[row[e] for e in combo] for row in rows]
            pivots, red = _row_reduce(sub, size)
            if len(pivots) == size:
                continue
            assert len(pivots) == size - 1, "minimal dependent set, kernel must be a line"
            free = next(c for c in range(size) if c not in pivots)
            v = [Fraction(0)] * size
            v[free] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -red[i][free]
            w = _primitive_int_vector(v)
            assert all(w), "kernel vector of a circuit has full support"
            pos = _mask_of(combo[i] for i in range(size) if w[i] > 0)
            neg = _mask_of(combo[i] for i in range(size) if w[i] < 0)
            circuits.append(SignedSet(pos, neg))
            supports.append(mask)
    return circuits


# ----------------------------------------------------------------------
# builders


def build_from_matrix(matrix, *, n=None, name="matrix") -> OrientedMatroid:
    """Oriented matroid realized by the columns of an integer matrix.

    matrix __ sequence of equal-length integer rows; may be rank-deficient.
    n      __ column count, required only when the matrix has no rows
              (every element is then a loop).

    Cocircuits are the circuits of the dual realization: any integer matrix
    whose rows span the orthogonal complement of the row space, here a
    primitive kernel basis.
    """
    rows = [list(r) for r in matrix]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("matrix rows have unequal lengths")
        if n is not None and n != width:
            raise ValueError("explicit n=%r does not match row length %d" % (n, width))
        n = width
    elif n is None:
        raise ValueError("a matrix with no rows needs an explicit column count n")
    if not 0 <= n <= MAX_ELEMENTS:
        raise ValueError("ground set too large: n=%d exceeds the hard cap %d" % (n, MAX_ELEMENTS))
    for row in rows:
        for x in row:
            if not isinstance(x, int):
                raise ValueError("matrix entries must be integers, got %r" % (x,))
    dual_rows = _kernel_basis(rows, n)
    circuits = _circuits_of_matrix(rows, n)
    cocircuits = _circuits_of_matrix(dual_rows, n)
    return OrientedMatroid(n, n - len(dual_rows), circuits, cocircuits, name)


def build_from_graph(edges, *, vertices=None, name="graph") -> OrientedMatroid:
    """Graphic oriented matroid of a directed multigraph.

    Edge j = (u, v) becomes ground element j with incidence column +1 at the
    head v and -1 at the tail u; a loop (u, u) contributes a zero column.
    Positive circuits are then consistently directed cycles and positive
    cocircuits are consistently directed minimal edge cuts.
    """
    edge_list = [tuple(e) for e in edges]
    if len(edge_list) > MAX_ELEMENTS:
        raise ValueError("too many edges: %d exceeds the hard cap %d" % (len(edge_list), MAX_ELEMENTS))
    for e in edge_list:
        if len(e) != 2 or not all(isinstance(v, int) and v >= 0 for v in e):
            raise ValueError("edges must be (tail, head) pairs of nonnegative ints, got %r" % (e,))
    nv = 1 + max((max(e) for e in edge_list), default=-1)
    if vertices is not None:
        if vertices < nv:
            raise ValueError("vertex count %d too small for the edge endpoints" % vertices)
        nv = vertices
    matrix = [[0] * len(edge_list) for _ in range(nv)]
    for j, (u, v) in enumerate(edge_list):
        if u != v:
            matrix[v][j] += 1
            matrix[u][j] -= 1
    return build_from_matrix(matrix, n=len(edge_list), name=name)


def build_uniform(r, n, name=None) -> OrientedMatroid:
    """U(r, n) realized by Vandermonde columns (1, t, ..., t^(r-1)), t = 1..n.

    Distinct nodes make every r columns independent, so the circuits are
    exactly the (r+1)-subsets and the cocircuits the (n-r+1)-subsets.
    """
    if not (isinstance(r, int) and isinstance(n, int) and 0 <= r <= n <= MAX_ELEMENTS):
        raise ValueError("invalid r, n: need integers 0 <= r <= n <= %d" % MAX_ELEMENTS)
    matrix = [[(i + 1) ** p for i in range(n)] for p in range(r)]
    return build_from_matrix(matrix, n=n, name=name or "U(%d,%d)" % (r, n))


def build_from_signed_sets(circuits, cocircuits, *, n=None, name="signed") -> OrientedMatroid:
    """Oriented matroid from explicit circuit and cocircuit lists.

    Entries may be SignedSet instances, (pos, neg) iterable pairs, or
    {"pos": [...], "neg": [...]} mappings; exact duplicates (after
    canonicalization) are dropped.  The ground set size defaults to one
    past the largest mentioned element.  The result is validated and
    rejected on any failure; rank is inferred from the circuit list with
    the greedy rank oracle.
    """
    circ = list(dict.fromkeys(_as_signed_set(x) for x in circuits))
    cocirc = list(dict.fromkeys(_as_signed_set(x) for x in cocircuits))
    if n is None:
        top = 0
        for X in itertools.chain(circ, cocirc):
            top = max(top, X.support_mask.bit_length())
        n = top
    rank = _greedy_rank([X.support_mask for X in circ], (1 << n) - 1)
    M = OrientedMatroid(n, rank, circ, cocirc, name)
    report = validate(M)
    if not report.ok:
        raise InvalidOrientedMatroid(report.failures[0])
    return M


# ----------------------------------------------------------------------
# queries


@dataclass
class ValidationReport:
    ok: bool
    failures: list = field(default_factory=list)


def _incomparability_failures(kind, sets):
    for i, X in enumerate(sets):
        for Y in sets[i + 1 :]:
            a, b = X.support_mask, Y.support_mask
            if a & b == a or a & b == b:
                return [
                    "%s supports are comparable: %r vs %r" % (kind, X, Y)
                ]
    return []


def validate(M: OrientedMatroid) -> ValidationReport:
    """Check the stored lists against the representation invariants.

    Covers canonical form and sign-part disjointness, element range,
    support incomparability within each list, circuit/cocircuit sign
    orthogonality, rank duality between the two lists, and (for n <= 12)
    that every reorientation splits the ground set into its acyclic and
    cyclic parts.  Each failed check reports its first counterexample.
    """
    failures = []
    for kind, sets in (("circuit", M.circuits), ("cocircuit", M.cocircuits)):
        for X in sets:
            if X.pos_mask & X.neg_mask:
                failures.append("%s %r has overlapping sign parts" % (kind, X))
                break
            if X.support_mask == 0:
                failures.append("%s with empty support" % kind)
                break
            if (X.support_mask & -X.support_mask) & X.neg_mask:
                failures.append("%s %r is not canonical" % (kind, X))
                break
            if X.support_mask & ~M.ground_mask:
                failures.append("%s %r leaves the ground set" % (kind, X))
                break
        failures.extend(_incomparability_failures(kind, list(sets)))

    for X in M.circuits:
        stop = False
        for Y in M.cocircuits:
            agree = (X.pos_mask & Y.pos_mask) | (X.neg_mask & Y.neg_mask)
            differ = (X.pos_mask & Y.neg_mask) | (X.neg_mask & Y.pos_mask)
            if (agree | differ) and (not agree or not differ):
                failures.append(
                    "orthogonality fails for circuit %r and cocircuit %r" % (X, Y)
                )
                stop = True
                break
        if stop:
            break

    circ_rank = _greedy_rank([s for s, _, _ in M.circuit_data], M.ground_mask)
    cocirc_rank = _greedy_rank([s for s, _, _ in M.cocircuit_data], M.ground_mask)
    if circ_rank + cocirc_rank != M.n:
        failures.append(
            "rank duality fails: circuits give rank %d, cocircuits corank %d, n=%d"
            % (circ_rank, cocirc_rank, M.n)
        )
    if M.rank != circ_rank:
        failures.append("stored rank %d differs from circuit rank %d" % (M.rank, circ_rank))

    if M.n <= 12 and not failures:
        for A in range(1 << M.n):
            acyc, cyc = _part_masks(M, A)
            if (acyc & cyc) or (acyc | cyc) != M.ground_mask:
                failures.append(
                    "reorientation %d does not split into acyclic and cyclic parts" % A
                )
                break
    return ValidationReport(not failures, failures)


def dual(M: OrientedMatroid) -> OrientedMatroid:
    """The dual oriented matroid: circuit and cocircuit lists swapped."""
    return OrientedMatroid(
        M.n, M.n - M.rank, M.cocircuits, M.circuits, name="dual(%s)" % M.name
    )


def _check_reorientation(M, A):
    if not isinstance(A, int) or A < 0 or A > M.ground_mask:
        raise ValueError("reorientation %r is not an n-bit word for n=%d" % (A, M.n))


def positive_sets(M: OrientedMatroid, A: int, kind: str):
    """Stored sets of one kind that are positive in -_A M, in storage order."""
    _check_reorientation(M, A)
    if kind == "circuit":
        sets = M.circuits
    elif kind == "cocircuit":
        sets = M.cocircuits
    else:
        raise ValueError("kind must be 'circuit' or 'cocircuit', got %r" % (kind,))
    return [X for X in sets if X.is_positive_in(A)]


def _part_masks(M, A):
    """(acyclic part, cyclic part) of -_A M as masks, without the tiling check."""
    cyc = 0
    for supp, pos, neg in M.circuit_data:
        inter = A & supp
        if inter == neg or inter == pos:
            cyc |= supp
    acyc = 0
    for supp, pos, neg in M.cocircuit_data:
        inter = A & supp
        if inter == neg or inter == pos:
            acyc |= supp
    return acyc, cyc


def part_decomposition(M: OrientedMatroid, A: int):
    """Acyclic and cyclic parts of -_A M, returned as (acyclic, cyclic) frozensets.

    The cyclic part is the union of supports of positive circuits, the
    acyclic part the union of supports of positive cocircuits; for a valid
    oriented matroid the two tile the ground set, and a failed tiling
    raises InvalidOrientedMatroid.
    """
    _check_reorientation(M, A)
    acyc, cyc = _part_masks(M, A)
    if (acyc & cyc) or (acyc | cyc) != M.ground_mask:
        raise InvalidOrientedMatroid(
            "reorientation %d of %s does not split into acyclic and cyclic parts" % (A, M.name)
        )
    return frozenset(_elements_of(acyc)), frozenset(_elements_of(cyc))


# ----------------------------------------------------------------------
# instance files


def instance_from_dict(data) -> OrientedMatroid:
    """Build an instance from a parsed mapping {"name": ..., "source": {...}}.

    The source holds exactly one of:
      "matrix"  __ [[int, ...], ...]
      "graph"   __ {"vertices": int, "edges": [[tail, head], ...]}
      "uniform" __ {"r": int, "n": int}
      "signed"  __ {"circuits": [{"pos": [...], "neg": [...]}, ...],
                    "cocircuits": [...]}
    """
    if not isinstance(data, dict) or "source" not in data:
        raise ValueError("instance data must be a mapping with a 'source' entry")
    name = data.get("name", "instance")
    source = data["source"]
    if not isinstance(source, dict) or len(source) != 1:
        raise ValueError("source must hold exactly one of matrix/graph/uniform/signed")
    (kind, body), = source.items()
    if kind == "matrix":
        return build_from_matrix(body, name=name)
    if kind == "graph":
        return build_from_graph(body["edges"], vertices=body.get("vertices"), name=name)
    if kind == "uniform":
        return build_uniform(body["r"], body["n"], name=name)
    if kind == "signed":
        return build_from_signed_sets(
            body.get("circuits", ()), body.get("cocircuits", ()), name=name
        )
    raise ValueError("unknown source kind %r" % (kind,))


def load_instance_file(path) -> OrientedMatroid:
    """Read a JSON instance file and build it."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError("malformed instance file %s: %s" % (path, exc)) from exc
    return instance_from_dict(data)
