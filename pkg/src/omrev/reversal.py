"""Reversal classes of reorientations under positive circuit/cocircuit flips.

Two reorientations A and B are in the same class when one reaches the other
by repeatedly reversing the support of a circuit or cocircuit that is
positive there.  The partition is built exhaustively: a disjoint-set forest
over all admitted n-bit words, united along every generator pair.  For a
stored set X with parts (X+, X-) the reorientations where X is positive are
exactly B | X- and B | X+ over subsets B of the complement of the support,
and those two words are each other's flip partners, so each stored set
contributes one union per complement subset.

Restrictions cut the admitted cube down to acyclic reorientations (no
positive circuit) or totally cyclic ones (no positive cocircuit); for a
valid oriented matroid a permitted reversal never leaves the admitted set,
and any escape raises InvalidOrientedMatroid.

The class counts in the five standard settings are bounded below by, and
for regular instances equal to, the Tutte evaluations t(1,1), t(1,2),
t(2,1), t(1,0), t(0,1).
"""

from __future__ import annotations

from .activity import is_minimal
from .core import InvalidOrientedMatroid, _check_reorientation

MODES = ("circuit", "cocircuit", "both")
RESTRICTIONS = ("all", "acyclic", "totally_cyclic")

# (label, mode, restriction, Tutte evaluation point), in the fixed order
# used by reversal_counts and the analysis reports
SETTINGS = (
    ("circuit_cocircuit", "both", "all", (1, 1)),
    ("cocircuit", "cocircuit", "all", (1, 2)),
    ("circuit", "circuit", "all", (2, 1)),
    ("acyclic_cocircuit", "cocircuit", "acyclic", (1, 0)),
    ("totally_cyclic_circuit", "circuit", "totally_cyclic", (0, 1)),
)


def _check_setting(mode, restriction):
    if mode not in MODES:
        raise ValueError("mode must be one of %r, got %r" % (MODES, mode))
    if restriction not in RESTRICTIONS:
        raise ValueError("restriction must be one of %r, got %r" % (RESTRICTIONS, restriction))
    if restriction == "acyclic" and mode == "circuit":
        raise ValueError("restriction='acyclic' requires mode 'cocircuit' or 'both'")
    if restriction == "totally_cyclic" and mode == "cocircuit":
        raise ValueError("restriction='totally_cyclic' requires mode 'circuit' or 'both'")


def _admitted_flags(M, restriction):
    """Admitted-membership bytearray over all words, or None for 'all'."""
    if restriction == "all":
        return None
    data = M.circuit_data if restriction == "acyclic" else M.cocircuit_data
    flags = bytearray(1 << M.n)
    for A in range(1 << M.n):
        for supp, pos, neg in data:
            inter = A & supp
            if inter == neg or inter == pos:
                break
        else:
            flags[A] = 1
    return flags


class ReversalPartition:
    """Disjoint-set partition of the admitted reorientations.

    Representatives are minimum members.  rep_of[A] is -1 for words outside
    the admitted set.
    """

    def __init__(self, mode, restriction, n, rep_of, class_count):
        self.mode = mode
        self.restriction = restriction
        self.n = n
        self.rep_of = rep_of
        self.class_count = class_count

    def is_admitted(self, A: int) -> bool:
        return self.rep_of[A] >= 0

    def representative(self, A: int) -> int:
        r = self.rep_of[A]
        if r < 0:
            raise ValueError(
                "reorientation %d is outside the admitted set (%s)" % (A, self.restriction)
            )
        return r

    def classes(self):
        """(representative, size) pairs by ascending representative."""
        sizes = {}
        for A in range(1 << self.n):
            r = self.rep_of[A]
            if r >= 0:
                sizes[r] = sizes.get(r, 0) + 1
        return sorted(sizes.items())

    def members(self, rep: int):
        return [A for A in range(1 << self.n) if self.rep_of[A] == rep]

    def to_json_dict(self, verbose=False):
        out = {
            "mode": self.mode,
            "restriction": self.restriction,
            "class_count": self.class_count,
            "classes": [
                {"representative": r, "size": s} for r, s in self.classes()
            ],
        }
        if verbose and self.n <= 12:
            for entry in out["classes"]:
                entry["members"] = self.members(entry["representative"])
        return out


def reversal_classes(M, mode: str = "both", restriction: str = "all") -> ReversalPartition:
    """Build the reversal-class partition in one setting (memoized on M)."""
    _check_setting(mode, restriction)
    key = ("reversal", mode, restriction)
    hit = M._cache.get(key)
    if hit is not None:
        return hit

    size = 1 << M.n
    admitted = _admitted_flags(M, restriction)
    generators = []
    if mode in ("circuit", "both"):
        generators.extend(M.circuit_data)
    if mode in ("cocircuit", "both"):
        generators.extend(M.cocircuit_data)

    parent = list(range(size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    weight = [1] * size
    full = M.ground_mask
    for supp, pos, neg in generators:
        comp = full & ~supp
        B = comp
        while True:
            a = B | neg
            b = B | pos
            if admitted is None:
                ra, rb = find(a), find(b)
                if ra != rb:
                    if weight[ra] < weight[rb]:
                        ra, rb = rb, ra
                    parent[rb] = ra
                    weight[ra] += weight[rb]
            else:
                fa, fb = admitted[a], admitted[b]
                if fa != fb:
                    raise InvalidOrientedMatroid(
                        "reversal step %d <-> %d leaves the %s set of %s"
                        % (a, b, restriction, M.name)
                    )
                if fa:
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        if weight[ra] < weight[rb]:
                            ra, rb = rb, ra
                        parent[rb] = ra
                        weight[ra] += weight[rb]
            if B == 0:
                break
            B = (B - 1) & comp

    rep_of = [-1] * size
    rep_of_root = {}
    count = 0
    for A in range(size):
        if admitted is not None and not admitted[A]:
            continue
        root = find(A)
        rep = rep_of_root.get(root)
        if rep is None:
            rep_of_root[root] = rep = A  # ascending scan: first hit is the minimum
            count += 1
        rep_of[A] = rep

    partition = ReversalPartition(mode, restriction, M.n, rep_of, count)
    M._cache[key] = partition
    return partition


def reversal_counts(M):
    """Class counts in the five standard settings, in SETTINGS order."""
    return tuple(
        reversal_classes(M, mode, restriction).class_count
        for _, mode, restriction, _ in SETTINGS
    )


def same_class(M, A: int, B: int, mode: str = "both", restriction: str = "all") -> bool:
    """True iff A and B fall in the same reversal class of the setting."""
    _check_reorientation(M, A)
    _check_reorientation(M, B)
    partition = reversal_classes(M, mode, restriction)
    return partition.representative(A) == partition.representative(B)


def find_minimal_pair_in_class(M, mode: str = "cocircuit", restriction: str = "acyclic"):
    """Two distinct minimal reorientations sharing a reversal class, or None.

    Minimality is module activity's is_minimal with the matching mode.  The
    scan is deterministic: among all classes holding two or more minimal
    members, it returns the lexicographically first pair (A, B), A < B.
    For a regular instance every setting returns None; a non-regular
    loopless instance must yield a pair in the default setting
    (mode='cocircuit', restriction='acyclic').
    """
    partition = reversal_classes(M, mode, restriction)
    first_minimal = {}
    best = None
    for A in range(1 << M.n):
        rep = partition.rep_of[A]
        if rep < 0 or not is_minimal(M, A, mode):
            continue
        if rep in first_minimal:
            pair = (first_minimal[rep], A)
            if best is None or pair < best:
                best = pair
        else:
            first_minimal[rep] = A
    return best
