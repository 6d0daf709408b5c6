"""Named instance catalog with frozen expected tables.

Small graphic and uniform oriented matroids used by the CLI, the verify
harness, and the regression tests.  Every expected value carries a
provenance note: "literature" for externally published facts (graphic
matroids are regular, uniform U(2,k) has one acyclic cocircuit reversal
class for even k and two for odd k, U(r,n) with a 4-point-line minor is
not regular), "oracle" for numbers computed by the exhaustive oracles in
this package and frozen on their first run.

The five-tuples follow the standard setting order: circuit-cocircuit,
cocircuit, circuit, acyclic cocircuit, totally cyclic circuit, matching
the Tutte evaluations t(1,1), t(1,2), t(2,1), t(1,0), t(0,1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import OrientedMatroid, build_from_graph, build_uniform


@dataclass(frozen=True)
class Expected:
    value: object
    provenance: str  # "literature" | "oracle"


@dataclass
class CatalogEntry:
    name: str
    description: str
    tags: frozenset
    expected: dict
    factory: object = field(repr=False)

    def build(self) -> OrientedMatroid:
        return self.factory()


def _graph(edges):
    def make(name):
        return build_from_graph(edges, name=name)

    return make


def _uniform(r, n):
    def make(name):
        return build_uniform(r, n, name=name)

    return make


_DEFS = (
    (
        "tri",
        "triangle graph 0->1, 1->2, 0->2",
        _graph([(0, 1), (1, 2), (0, 2)]),
        ("regular", "loopless-coloopless", "graphic"),
        {
            "regular": Expected(True, "literature"),
            "tutte_evaluations": Expected((3, 4, 7, 2, 1), "oracle"),
            "reversal_counts": Expected((3, 4, 7, 2, 1), "oracle"),
        },
    ),
    (
        "c4",
        "directed 4-cycle",
        _graph([(0, 1), (1, 2), (2, 3), (3, 0)]),
        ("regular", "loopless-coloopless", "graphic"),
        {
            "regular": Expected(True, "literature"),
            "tutte_evaluations": Expected((4, 5, 15, 3, 1), "oracle"),
            "reversal_counts": Expected((4, 5, 15, 3, 1), "oracle"),
        },
    ),
    (
        "c5",
        "directed 5-cycle",
        _graph([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        ("regular", "loopless-coloopless", "graphic"),
        {
            "regular": Expected(True, "literature"),
            "tutte_evaluations": Expected((5, 6, 31, 4, 1), "oracle"),
            "reversal_counts": Expected((5, 6, 31, 4, 1), "oracle"),
        },
    ),
    (
        "k4",
        "complete graph on 4 vertices, edges in lex order",
        _graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ("regular", "loopless-coloopless", "graphic"),
        {
            "regular": Expected(True, "literature"),
            "tutte_evaluations": Expected((16, 38, 38, 6, 6), "oracle"),
            "reversal_counts": Expected((16, 38, 38, 6, 6), "oracle"),
        },
    ),
    (
        "path2",
        "path 0->1->2: two coloops",
        _graph([(0, 1), (1, 2)]),
        ("regular", "has-coloop", "graphic"),
        {
            "regular": Expected(True, "literature"),
            "tutte_evaluations": Expected((1, 1, 4, 1, 0), "oracle"),
            "reversal_counts": Expected((1, 1, 4, 1, 0), "oracle"),
        },
    ),
    (
        "loop1",
        "a single loop",
        _graph([(0, 0)]),
        ("regular", "has-loop", "graphic"),
        {
            "regular": Expected(True, "literature"),
            "tutte_evaluations": Expected((1, 2, 1, 0, 1), "oracle"),
            "reversal_counts": Expected((1, 2, 1, 0, 1), "oracle"),
        },
    ),
    (
        "loop-plus-triangle",
        "triangle graph plus a loop (element 3)",
        _graph([(0, 1), (1, 2), (0, 2), (0, 0)]),
        ("regular", "has-loop", "graphic"),
        {
            "regular": Expected(True, "literature"),
            "tutte_evaluations": Expected((3, 8, 7, 0, 1), "oracle"),
            "reversal_counts": Expected((3, 8, 7, 0, 1), "oracle"),
        },
    ),
    (
        "u24",
        "uniform U(2,4): the 4-point line",
        _uniform(2, 4),
        ("non-regular", "loopless-coloopless", "uniform"),
        {
            "regular": Expected(False, "literature"),
            "tutte_evaluations": Expected((6, 11, 11, 3, 3), "oracle"),
            "reversal_counts": Expected((2, 9, 9, 1, 1), "oracle"),
            "acyclic_cocircuit_classes": Expected(1, "literature"),
        },
    ),
    (
        "u25",
        "uniform U(2,5)",
        _uniform(2, 5),
        ("non-regular", "loopless-coloopless", "uniform"),
        {
            "regular": Expected(False, "literature"),
            "tutte_evaluations": Expected((10, 26, 16, 4, 6), "oracle"),
            "reversal_counts": Expected((3, 24, 11, 2, 1), "oracle"),
            "acyclic_cocircuit_classes": Expected(2, "literature"),
        },
    ),
    (
        "u26",
        "uniform U(2,6)",
        _uniform(2, 6),
        ("non-regular", "loopless-coloopless", "uniform"),
        {
            "regular": Expected(False, "literature"),
            "tutte_evaluations": Expected((15, 57, 22, 5, 10), "oracle"),
            "reversal_counts": Expected((2, 53, 13, 1, 1), "oracle"),
            "acyclic_cocircuit_classes": Expected(1, "literature"),
        },
    ),
    (
        "u35",
        "uniform U(3,5)",
        _uniform(3, 5),
        ("non-regular", "loopless-coloopless", "uniform"),
        {
            "regular": Expected(False, "literature"),
            "tutte_evaluations": Expected((10, 16, 26, 6, 4), "oracle"),
            "reversal_counts": Expected((3, 11, 24, 1, 2), "oracle"),
        },
    ),
    (
        "u36",
        "uniform U(3,6)",
        _uniform(3, 6),
        ("non-regular", "loopless-coloopless", "uniform"),
        {
            "regular": Expected(False, "literature"),
            "tutte_evaluations": Expected((20, 42, 42, 10, 10), "oracle"),
            "reversal_counts": Expected((6, 35, 35, 3, 3), "oracle"),
        },
    ),
)


def catalog_instances():
    """All catalog entries, in the fixed listing order."""
    out = []
    for name, desc, factory, tags, expected in _DEFS:
        out.append(
            CatalogEntry(
                name=name,
                description=desc,
                tags=frozenset(tags),
                expected=dict(expected),
                factory=lambda factory=factory, name=name: factory(name),
            )
        )
    return out


def get_entry(name: str) -> CatalogEntry:
    for entry in catalog_instances():
        if entry.name == name:
            return entry
    raise KeyError("no catalog entry named %r" % (name,))


def get_instance(name: str) -> OrientedMatroid:
    """Build the named catalog instance."""
    return get_entry(name).build()
