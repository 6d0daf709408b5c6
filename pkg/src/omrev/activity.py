"""Orientation activities and the activity decomposition of the 2^n cube.

Fix a linear order on the ground set (the identity order by default, or any
permutation).  In a reorientation -_A M, an element is active when it is
the minimum of the support of some positive circuit, and dual-active when
it is the minimum of some positive cocircuit support.  Writing o(A) and
o*(A) for the two counts, the orientation-activity generating sum

    t(M; x, y) = sum over A of (x/2)^(o*(A)) * (y/2)^(o(A))

recovers the Tutte polynomial exactly, and the counts of minimal
reorientations (those containing no such minimum of the permitted kind)
match t at (1,1), (1,2), (2,1), (1,0), (0,1) for every oriented matroid
and every order.

The active partition splits the ground set by threshold unions of positive
supports; flipping whole parts generates the activity classes, which tile
the cube with one minimal reorientation in each class.
"""

from __future__ import annotations

from .core import InvalidOrientedMatroid, _check_reorientation, _elements_of
from .tutte import TuttePolynomial

_MODES = ("circuit", "cocircuit", "both")


def _positions(n, order):
    """position[e] of each element in the given ground order; None = identity.

    order lists the elements from smallest to largest and must be a
    permutation of range(n).
    """
    if order is None:
        return None
    order = list(order)
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of range(%d)" % n)
    pos = [0] * n
    for k, e in enumerate(order):
        pos[e] = k
    return pos


def _min_bit(supp_mask, positions):
    """Bit of the minimum element of a support under the order."""
    if positions is None:
        return supp_mask & -supp_mask
    best = min(_elements_of(supp_mask), key=positions.__getitem__)
    return 1 << best


def _signed_data(triples, positions):
    """(supp, pos, neg, min-bit) per stored set, for one fixed order."""
    return [(s, p, q, _min_bit(s, positions)) for s, p, q in triples]


class ActivityData:
    """Active and dual-active element sets of one reorientation."""

    __slots__ = ("active_elements", "dual_active_elements")

    def __init__(self, active_elements, dual_active_elements):
        self.active_elements = frozenset(active_elements)
        self.dual_active_elements = frozenset(dual_active_elements)

    @property
    def o(self) -> int:
        return len(self.active_elements)

    @property
    def o_star(self) -> int:
        return len(self.dual_active_elements)

    def __eq__(self, other):
        if not isinstance(other, ActivityData):
            return NotImplemented
        return (
            self.active_elements == other.active_elements
            and self.dual_active_elements == other.dual_active_elements
        )

    def __repr__(self):
        return "ActivityData(active=%r, dual_active=%r)" % (
            sorted(self.active_elements),
            sorted(self.dual_active_elements),
        )


def _active_masks(M, A, positions):
    """(circuit-side minima mask, cocircuit-side minima mask) at A."""
    act = 0
    for supp, pos, neg in M.circuit_data:
        inter = A & supp
        if inter == neg or inter == pos:
            act |= _min_bit(supp, positions)
    dact = 0
    for supp, pos, neg in M.cocircuit_data:
        inter = A & supp
        if inter == neg or inter == pos:
            dact |= _min_bit(supp, positions)
    return act, dact


def activities(M, A: int, order=None) -> ActivityData:
    """Active and dual-active elements of -_A M under the given order."""
    _check_reorientation(M, A)
    positions = _positions(M.n, order)
    act, dact = _active_masks(M, A, positions)
    return ActivityData(_elements_of(act), _elements_of(dact))


def is_minimal(M, A: int, mode: str = "both", order=None) -> bool:
    """True iff A contains no minimum of a positive set of the permitted kind.

    mode 'circuit' looks at positive circuits only, 'cocircuit' at positive
    cocircuits only, 'both' at both lists.
    """
    _check_reorientation(M, A)
    if mode not in _MODES:
        raise ValueError("mode must be one of %r, got %r" % (_MODES, mode))
    positions = _positions(M.n, order)
    kinds = []
    if mode in ("circuit", "both"):
        kinds.append(M.circuit_data)
    if mode in ("cocircuit", "both"):
        kinds.append(M.cocircuit_data)
    for triples in kinds:
        for supp, pos, neg in triples:
            inter = A & supp
            if (inter == neg or inter == pos) and (A & _min_bit(supp, positions)):
                return False
    return True


def minimal_counts(M, order=None):
    """Exhaustive counts over all 2^n reorientations, as the tuple

        (circuit-cocircuit minimal, cocircuit minimal, circuit minimal,
         acyclic cocircuit minimal, totally cyclic circuit minimal).

    These equal the Tutte evaluations t(1,1), t(1,2), t(2,1), t(1,0),
    t(0,1) for every oriented matroid and every ground order.
    """
    positions = _positions(M.n, order)
    circ = _signed_data(M.circuit_data, positions)
    cocirc = _signed_data(M.cocircuit_data, positions)
    c_both = c_co = c_ci = c_ac = c_tc = 0
    for A in range(1 << M.n):
        circ_hit = has_pos_circ = False
        for supp, pos, neg, mb in circ:
            inter = A & supp
            if inter == neg or inter == pos:
                has_pos_circ = True
                if A & mb:
                    circ_hit = True
                    break
        coc_hit = has_pos_cocirc = False
        for supp, pos, neg, mb in cocirc:
            inter = A & supp
            if inter == neg or inter == pos:
                has_pos_cocirc = True
                if A & mb:
                    coc_hit = True
                    break
        if not circ_hit and not coc_hit:
            c_both += 1
        if not coc_hit:
            c_co += 1
        if not circ_hit:
            c_ci += 1
        if not has_pos_circ and not coc_hit:
            c_ac += 1
        if not has_pos_cocirc and not circ_hit:
            c_tc += 1
    return (c_both, c_co, c_ci, c_ac, c_tc)


def greedy_minimalize(M, A: int, order=None) -> int:
    """Walk A down to a circuit-cocircuit minimal reorientation of its class.

    While some positive circuit or cocircuit has its support minimum inside
    the current set, reverse one such support: the one with the smallest
    minimum, ties broken by lexicographically smallest support (both under
    the order).  Each step is a legal reversal, so the result stays in the
    circuit-cocircuit reversal class of A.  The step count is capped at
    4**n; exceeding the cap means the input is not a valid oriented
    matroid.
    """
    _check_reorientation(M, A)
    positions = _positions(M.n, order)

    def key_of(supp):
        # ascending position tuple: comparing these lexicographically is
        # "smallest minimum first, ties by lex-smallest support"
        if positions is None:
            return tuple(_elements_of(supp))
        return tuple(sorted(positions[e] for e in _elements_of(supp)))

    data = []
    for supp, pos, neg in M.circuit_data + M.cocircuit_data:
        data.append((supp, pos, neg, _min_bit(supp, positions), key_of(supp)))
    B = A
    cap = 4 ** M.n
    steps = 0
    while True:
        best = None
        for supp, pos, neg, mb, key in data:
            if not (B & mb):
                continue
            inter = B & supp
            if inter == neg or inter == pos:
                if best is None or key < best[0]:
                    best = (key, supp)
        if best is None:
            return B
        B ^= best[1]
        steps += 1
        if steps > cap:
            raise InvalidOrientedMatroid(
                "greedy walk exceeded %d steps on %s; input cannot be a valid "
                "oriented matroid" % (cap, M.name)
            )


class ActivePart:
    """One part of an active partition: a leader and its element block."""

    __slots__ = ("leader", "elements_mask", "side")

    def __init__(self, leader, elements_mask, side):
        self.leader = leader
        self.elements_mask = elements_mask
        self.side = side  # "circuit" or "cocircuit"

    @property
    def elements(self) -> frozenset:
        return frozenset(_elements_of(self.elements_mask))

    def __repr__(self):
        return "ActivePart(leader=%d, elements=%r, side=%r)" % (
            self.leader,
            _elements_of(self.elements_mask),
            self.side,
        )


class ActivePartition:
    """Active partition of the ground set at one reorientation."""

    def __init__(self, parts):
        self.parts = tuple(parts)

    def side(self, which):
        return tuple(p for p in self.parts if p.side == which)

    @property
    def part_masks(self):
        return tuple(p.elements_mask for p in self.parts)

    def __repr__(self):
        return "ActivePartition(%r)" % (list(self.parts),)


def _side_parts(entries, positions, side):
    """Threshold-union parts for one side.

    entries: (support mask, min element) of each positive set of that kind.
    F(a) = union of supports whose minimum is >= a in the order; the part
    of leader a_i is F(a_i) minus F(a_(i+1)) over the sorted leaders.
    """
    if not entries:
        return []
    keyfn = (lambda e: e) if positions is None else positions.__getitem__
    leaders = sorted({m for _, m in entries}, key=keyfn)
    union_from = {}
    acc = 0
    for a in reversed(leaders):
        for supp, m in entries:
            if m == a:
                acc |= supp
        union_from[a] = acc
    parts = []
    for i, a in enumerate(leaders):
        upper = union_from[leaders[i + 1]] if i + 1 < len(leaders) else 0
        parts.append(ActivePart(a, union_from[a] & ~upper, side))
    return parts


def active_partition(M, A: int, order=None) -> ActivePartition:
    """Partition of the ground set induced by the activities of -_A M.

    Circuit-side parts tile the cyclic part, cocircuit-side parts the
    acyclic part; each leader is the minimum of its part under the order.
    Violations raise InvalidOrientedMatroid (they cannot occur for a valid
    oriented matroid).
    """
    _check_reorientation(M, A)
    positions = _positions(M.n, order)
    sides = []
    for triples, side in ((M.circuit_data, "circuit"), (M.cocircuit_data, "cocircuit")):
        entries = []
        for supp, pos, neg in triples:
            inter = A & supp
            if inter == neg or inter == pos:
                mb = _min_bit(supp, positions)
                entries.append((supp, mb.bit_length() - 1))
        sides.append(_side_parts(entries, positions, side))
    parts = sides[0] + sides[1]

    covered = 0
    for p in parts:
        if covered & p.elements_mask:
            raise InvalidOrientedMatroid(
                "active partition parts overlap at reorientation %d of %s" % (A, M.name)
            )
        covered |= p.elements_mask
        if not (p.elements_mask >> p.leader) & 1:
            raise InvalidOrientedMatroid(
                "leader %d dropped out of its part at reorientation %d" % (p.leader, A)
            )
        if _min_bit(p.elements_mask, positions) != 1 << p.leader:
            raise InvalidOrientedMatroid(
                "leader %d is not the minimum of its part at reorientation %d"
                % (p.leader, A)
            )
    if covered != M.ground_mask:
        raise InvalidOrientedMatroid(
            "active partition misses elements at reorientation %d of %s" % (A, M.name)
        )
    keyfn = (lambda e: e) if positions is None else positions.__getitem__
    return ActivePartition(sorted(parts, key=lambda p: keyfn(p.leader)))


class ActivityClasses:
    """Partition of all 2^n reorientations into activity classes.

    A class is generated from any member by flipping arbitrary unions of
    its active-partition parts; classes are listed by ascending
    representative (the minimum member).
    """

    def __init__(self, n, classes, class_of):
        self.n = n
        self.classes = tuple(tuple(c) for c in classes)
        self._class_of = class_of

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_of(self, A: int) -> int:
        """Representative of the class containing A."""
        return self._class_of[A]

    def sizes(self):
        return tuple(len(c) for c in self.classes)


def activity_classes(M, order=None) -> ActivityClasses:
    """Tile the reorientation cube by flipping active-partition parts.

    Every class size is a power of two (2^(number of parts)) and each class
    contains exactly one circuit-cocircuit minimal reorientation; the class
    count equals the basis count t(1,1).  Two members generating different
    classes would mean the input is not a valid oriented matroid; that
    inconsistency raises InvalidOrientedMatroid.
    """
    if M.n > 16:
        raise ValueError("activity_classes enumerates 2^n classes; n=%d > 16" % M.n)
    size = 1 << M.n
    class_of = [-1] * size
    classes = []
    for A in range(size):
        if class_of[A] >= 0:
            continue
        parts = active_partition(M, A, order).part_masks
        members = [A]
        for pm in parts:
            members += [m ^ pm for m in members]
        members.sort()
        if members[0] != A or any(class_of[m] >= 0 for m in members):
            raise InvalidOrientedMatroid(
                "activity classes disagree around reorientation %d of %s" % (A, M.name)
            )
        for m in members:
            class_of[m] = A
        classes.append(tuple(members))
    return ActivityClasses(M.n, classes, class_of)


def tutte_via_activities(M, order=None) -> TuttePolynomial:
    """Tutte polynomial from the orientation-activity generating sum.

    Groups reorientations by (o, o*) and divides each count by 2^(o + o*);
    a non-integral division or an out-of-range activity means the input is
    not a valid oriented matroid and raises InvalidOrientedMatroid.
    """
    positions = _positions(M.n, order)
    r, nul = M.rank, M.n - M.rank
    counts = [[0] * (nul + 1) for _ in range(r + 1)]
    for A in range(1 << M.n):
        act, dact = _active_masks(M, A, positions)
        o = act.bit_count()
        o_star = dact.bit_count()
        if o_star > r or o > nul:
            raise InvalidOrientedMatroid(
                "activities (%d, %d) at reorientation %d exceed rank/nullity of %s"
                % (o, o_star, A, M.name)
            )
        counts[o_star][o] += 1
    coeffs = [[0] * (nul + 1) for _ in range(r + 1)]
    for i in range(r + 1):
        for j in range(nul + 1):
            c = counts[i][j]
            denom = 1 << (i + j)
            if c % denom:
                raise InvalidOrientedMatroid(
                    "activity count %d at (o*=%d, o=%d) of %s is not divisible by 2^%d"
                    % (c, i, j, M.name, i + j)
                )
            coeffs[i][j] = c // denom
    return TuttePolynomial(r, coeffs)


def activity_report(M, order=None):
    """Per-reorientation activity records for small instances (n <= 12).

    Each record: {"A": word, "o": ..., "o_star": ..., "minimal":
    {"circuit": ..., "cocircuit": ..., "both": ...}}.
    """
    if M.n > 12:
        raise ValueError("activity_report is limited to n <= 12, got n=%d" % M.n)
    positions = _positions(M.n, order)
    circ = _signed_data(M.circuit_data, positions)
    cocirc = _signed_data(M.cocircuit_data, positions)
    records = []
    for A in range(1 << M.n):
        act = dact = 0
        circ_hit = coc_hit = False
        for supp, pos, neg, mb in circ:
            inter = A & supp
            if inter == neg or inter == pos:
                act |= mb
                if A & mb:
                    circ_hit = True
        for supp, pos, neg, mb in cocirc:
            inter = A & supp
            if inter == neg or inter == pos:
                dact |= mb
                if A & mb:
                    coc_hit = True
        records.append(
            {
                "A": A,
                "o": act.bit_count(),
                "o_star": dact.bit_count(),
                "minimal": {
                    "circuit": not circ_hit,
                    "cocircuit": not coc_hit,
                    "both": not (circ_hit or coc_hit),
                },
            }
        )
    return records
