"""Regularity test by circuit-cocircuit intersection parity.

A matroid is binary iff every circuit support meets every cocircuit
support in an even number of elements, and an orientable binary matroid is
regular.  Inputs here always carry an orientation, so the quadratic parity
scan over the stored lists decides regularity outright.  Equality of
reversal-class counts with the matching Tutte evaluations holds exactly
for the regular instances; the witness pair of a failed test is the first
odd intersection in storage order.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class RegularityVerdict:
    regular: bool
    witness: tuple | None = None  # (circuit support, cocircuit support) frozensets

    def to_json_dict(self):
        if self.witness is None:
            return {"regular": self.regular, "witness": None}
        c, d = self.witness
        return {
            "regular": self.regular,
            "witness": {"circuit": sorted(c), "cocircuit": sorted(d)},
        }


def is_binary(M) -> RegularityVerdict:
    """Even-intersection scan over all circuit/cocircuit support pairs."""
    for X in M.circuits:
        for Y in M.cocircuits:
            if (X.support_mask & Y.support_mask).bit_count() % 2:
                return RegularityVerdict(False, (X.support, Y.support))
    return RegularityVerdict(True, None)


def classify(M) -> str:
    """'regular' or 'non-regular' (vacuously regular without circuits)."""
    return "regular" if is_binary(M).regular else "non-regular"
