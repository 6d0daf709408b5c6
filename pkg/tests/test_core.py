import json

import pytest
from hypothesis import given, settings, strategies as st

from omrev import (
    InvalidOrientedMatroid,
    OrientedMatroid,
    SignedSet,
    build_from_graph,
    build_from_matrix,
    build_from_signed_sets,
    build_uniform,
    dual,
    instance_from_dict,
    load_instance_file,
    part_decomposition,
    positive_sets,
    validate,
)

TRIANGLE = [[1, 0, 1], [0, 1, 1]]
U24_MATRIX = [[1, 0, 1, 1], [0, 1, 1, 2]]


def ss(pos, neg=()):
    return SignedSet(pos, neg)


class TestSignedSet:
    def test_canonical_flip(self):
        # min of support lands in the positive part
        assert ss((2,), (0, 1)) == ss((0, 1), (2,))

    def test_disjointness_required(self):
        with pytest.raises(ValueError):
            SignedSet((0, 1), (1,))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            SignedSet((), ())

    def test_sign(self):
        x = ss((0, 1), (2,))
        assert x.sign(0) == 1
        assert x.sign(2) == -1
        assert x.sign(5) == 0

    def test_support(self):
        x = ss((0, 3), (2,))
        assert x.support == frozenset({0, 2, 3})
        assert x.support_mask == 0b1101
        assert x.min_element == 0

    def test_is_positive_in(self):
        x = ss((0, 1), (2,))
        assert not x.is_positive_in(0)
        assert x.is_positive_in(0b100)  # reversing 2 aligns all signs
        assert x.is_positive_in(0b011)  # reversing the positive part too
        assert not x.is_positive_in(0b001)

    def test_reoriented(self):
        x = ss((0, 1), (2,))
        assert x.reoriented(0b100) == ss((0, 1, 2))
        assert x.reoriented(0) == x
        # reorienting outside the support does nothing
        assert x.reoriented(0b11000) == x

    def test_json_dict(self):
        d = ss((0, 2), (1,)).to_json_dict()
        assert d == {"pos": [0, 2], "neg": [1]}

    @given(st.sets(st.integers(0, 9), min_size=1))
    def test_canonical_idempotent(self, support):
        support = sorted(support)
        pos = support[::2]
        neg = support[1::2]
        x = ss(pos, neg)
        y = SignedSet(x.pos, x.neg)
        assert x == y and hash(x) == hash(y)
        assert x.min_element in x.pos

    @given(
        st.sets(st.integers(0, 9), min_size=1),
        st.integers(0, (1 << 10) - 1),
    )
    def test_double_reorient_identity(self, support, A):
        support = sorted(support)
        x = ss(support[::2], support[1::2])
        assert x.reoriented(A).reoriented(A) == x


class TestMatrixBuild:
    def test_triangle_circuits(self):
        M = build_from_matrix(TRIANGLE)
        assert M.n == 3 and M.rank == 2
        assert M.circuits == (ss((0, 1), (2,)),)
        assert M.cocircuits == (ss((0,), (1,)), ss((0, 2)), ss((1, 2)))

    def test_u24_circuits(self):
        M = build_from_matrix(U24_MATRIX)
        assert M.circuits == (
            ss((0, 1), (2,)),
            ss((0, 1), (3,)),
            ss((0, 3), (2,)),
            ss((1, 2), (3,)),
        )
        assert len(M.cocircuits) == 4
        assert ss((1, 2, 3)) in M.cocircuits

    def test_zero_column_is_loop(self):
        M = build_from_matrix([[0, 1]])
        assert M.loops_mask == 0b01
        assert ss((0,)) in M.circuits

    def test_empty_matrix_needs_n(self):
        with pytest.raises(ValueError):
            build_from_matrix([])
        M = build_from_matrix([], n=2)
        assert M.rank == 0 and len(M.circuits) == 2

    def test_non_integer_rejected(self):
        with pytest.raises(ValueError):
            build_from_matrix([[1, 0.5]])

    def test_too_many_columns(self):
        with pytest.raises(ValueError):
            build_from_matrix([[1] * 21])


class TestGraphBuild:
    def test_triangle_matches_matrix(self):
        G = build_from_graph([(0, 1), (1, 2), (0, 2)])
        M = build_from_matrix(TRIANGLE)
        assert G.circuits == M.circuits
        assert G.cocircuits == M.cocircuits

    def test_loop_edge(self):
        M = build_from_graph([(0, 1), (1, 2), (0, 2), (0, 0)])
        assert ss((3,)) in M.circuits
        assert M.loops_mask == 0b1000

    def test_path_has_no_circuits(self):
        M = build_from_graph([(0, 1), (1, 2)])
        assert M.circuits == ()
        assert M.cocircuits == (ss((0,)), ss((1,)))
        assert M.coloops_mask == 0b11

    def test_isolated_vertices_allowed(self):
        M = build_from_graph([(0, 1)], vertices=4)
        assert M.rank == 1

    def test_bad_edge(self):
        with pytest.raises(ValueError):
            build_from_graph([(0, 1)], vertices=1)


class TestUniformBuild:
    def test_u24(self):
        M = build_uniform(2, 4)
        assert M.name == "U(2,4)"
        assert len(M.circuits) == 4 and len(M.cocircuits) == 4
        assert all(len(X.support) == 3 for X in M.circuits)

    def test_u25_counts(self):
        M = build_uniform(2, 5)
        assert len(M.circuits) == 10  # every 3-subset
        assert len(M.cocircuits) == 5

    def test_rank_zero(self):
        M = build_uniform(0, 3)
        assert M.circuits == (ss((0,)), ss((1,)), ss((2,)))
        assert M.cocircuits == ()

    def test_full_rank(self):
        M = build_uniform(3, 3)
        assert M.circuits == () and len(M.cocircuits) == 3

    def test_bad_rank(self):
        with pytest.raises(ValueError):
            build_uniform(4, 3)


class TestSignedSetBuild:
    def test_accepts_valid_triangle(self):
        M = build_from_matrix(TRIANGLE)
        rebuilt = build_from_signed_sets(
            [(X.pos, X.neg) for X in M.circuits],
            [(Y.pos, Y.neg) for Y in M.cocircuits],
        )
        assert rebuilt == M

    def test_free_matroid(self):
        M = build_from_signed_sets([], [((0,), ()), ((1,), ())])
        assert M.n == 2 and M.rank == 2

    def test_rejects_orthogonality_violation(self):
        # a single common element with agreeing signs cannot happen
        with pytest.raises(InvalidOrientedMatroid):
            build_from_signed_sets([((0,), ())], [((0,), ())])

    def test_deduplicates_negatives(self):
        M = build_from_signed_sets(
            [((0, 1), (2,)), ((2,), (0, 1))],
            [((0,), (1,)), ((0, 2), ()), ((1, 2), ())],
        )
        assert len(M.circuits) == 1

    def test_dict_form(self):
        M = build_from_signed_sets(
            [{"pos": [0, 1], "neg": [2]}],
            [{"pos": [0], "neg": [1]}, {"pos": [0, 2]}, {"pos": [1, 2]}],
        )
        assert M == build_from_matrix(TRIANGLE)


class TestValidate:
    def test_catalog_triangle_ok(self):
        report = validate(build_from_matrix(TRIANGLE))
        assert report.ok and report.failures == []

    def test_tampered_sign_fails_orthogonality(self):
        M = build_from_matrix(U24_MATRIX)
        bad = list(M.circuits)
        x = bad[0]
        bad[0] = SignedSet(x.pos - {1}, x.neg | {1})
        tampered = OrientedMatroid(M.n, M.rank, bad, M.cocircuits)
        report = validate(tampered)
        assert not report.ok
        assert any("orthogonality" in f for f in report.failures)

    def test_nested_support_fails(self):
        M = OrientedMatroid(
            2, 1, [ss((0,)), ss((0, 1))], [ss((1,))]
        )
        report = validate(M)
        assert not report.ok
        assert any("comparable" in f for f in report.failures)

    def test_wrong_rank_fails(self):
        M = build_from_matrix(TRIANGLE)
        wrong = OrientedMatroid(M.n, 1, M.circuits, M.cocircuits)
        assert not validate(wrong).ok


class TestDual:
    def test_swaps_lists(self):
        M = build_from_matrix(TRIANGLE)
        D = dual(M)
        assert D.circuits == M.cocircuits
        assert D.cocircuits == M.circuits
        assert D.rank == M.n - M.rank

    def test_involution(self):
        M = build_uniform(2, 5)
        assert dual(dual(M)) == M

    def test_uniform_dual_supports(self):
        # same underlying matroid as U(3,5); signs come out reoriented
        D = dual(build_uniform(2, 5))
        U = build_uniform(3, 5)
        assert [X.support for X in D.circuits] == [X.support for X in U.circuits]
        assert [X.support for X in D.cocircuits] == [X.support for X in U.cocircuits]
        assert validate(D).ok


class TestReorientationGeometry:
    def test_positive_sets_triangle(self):
        M = build_from_matrix(TRIANGLE)
        assert positive_sets(M, 0, "circuit") == []
        assert positive_sets(M, 0, "cocircuit") == [ss((0, 2)), ss((1, 2))]
        assert positive_sets(M, 0b010, "cocircuit")[0] == ss((0,), (1,))
        assert positive_sets(M, 0b100, "circuit") == [ss((0, 1), (2,))]

    def test_part_decomposition_triangle(self):
        M = build_from_matrix(TRIANGLE)
        acyclic, cyclic = part_decomposition(M, 0)
        assert acyclic == frozenset({0, 1, 2}) and cyclic == frozenset()
        acyclic, cyclic = part_decomposition(M, 0b100)
        assert acyclic == frozenset() and cyclic == frozenset({0, 1, 2})

    def test_parts_tile_everywhere(self):
        M = build_from_matrix(U24_MATRIX)
        for A in range(1 << M.n):
            acyclic, cyclic = part_decomposition(M, A)
            assert acyclic | cyclic == frozenset(range(M.n))
            assert not (acyclic & cyclic)

    def test_reorientation_out_of_range(self):
        M = build_from_matrix(TRIANGLE)
        with pytest.raises(ValueError):
            positive_sets(M, 1 << 5, "circuit")


@st.composite
def small_int_matrices(draw):
    rows = draw(st.integers(1, 3))
    cols = draw(st.integers(1, 5))
    return [
        [draw(st.integers(-3, 3)) for _ in range(cols)] for _ in range(rows)
    ]


class TestRandomizedMatrix:
    @settings(max_examples=40, deadline=None)
    @given(small_int_matrices())
    def test_build_validates_and_dualizes(self, rows):
        M = build_from_matrix(rows)
        assert validate(M).ok
        D = dual(M)
        assert validate(D).ok
        assert dual(D) == M

    @settings(max_examples=40, deadline=None)
    @given(small_int_matrices())
    def test_rank_matches_elimination(self, rows):
        from oracles import matrix_rank

        M = build_from_matrix(rows)
        assert M.rank == matrix_rank(rows, list(range(M.n)))

    @settings(max_examples=25, deadline=None)
    @given(small_int_matrices())
    def test_build_is_deterministic(self, rows):
        assert build_from_matrix(rows) == build_from_matrix(rows)


class TestRealizationIndependence:
    def test_u24_from_two_generic_frames(self):
        from omrev import classify, minimal_counts, reversal_counts, tutte_polynomial

        A = build_uniform(2, 4)
        B = build_from_matrix(U24_MATRIX)
        assert tutte_polynomial(A) == tutte_polynomial(B)
        assert reversal_counts(A) == reversal_counts(B)
        assert minimal_counts(A) == minimal_counts(B)
        assert classify(A) == classify(B) == "non-regular"

    def test_permuted_columns_keep_all_counts(self):
        from omrev import minimal_counts, reversal_counts, tutte_polynomial

        rows = [[1, 1, 1, 1], [1, 2, 3, 4]]
        perm = (2, 0, 3, 1)
        permuted = [[row[e] for e in perm] for row in rows]
        A = build_from_matrix(rows)
        B = build_from_matrix(permuted)
        assert tutte_polynomial(A) == tutte_polynomial(B)
        assert reversal_counts(A) == reversal_counts(B)
        assert minimal_counts(A) == minimal_counts(B)


class TestInstanceLoading:
    def test_matrix_source(self):
        M = instance_from_dict(
            {"name": "tri", "source": {"matrix": TRIANGLE}}
        )
        assert M.name == "tri" and M.rank == 2

    def test_graph_source(self):
        M = instance_from_dict(
            {"source": {"graph": {"edges": [[0, 1], [1, 2], [0, 2]]}}}
        )
        assert M == build_from_graph([(0, 1), (1, 2), (0, 2)])

    def test_uniform_source(self):
        M = instance_from_dict({"source": {"uniform": {"r": 2, "n": 4}}})
        assert M == build_uniform(2, 4)

    def test_signed_source(self):
        M = instance_from_dict(
            {
                "source": {
                    "signed": {
                        "circuits": [{"pos": [0, 1], "neg": [2]}],
                        "cocircuits": [
                            {"pos": [0], "neg": [1]},
                            {"pos": [0, 2]},
                            {"pos": [1, 2]},
                        ],
                    }
                }
            }
        )
        assert M == build_from_matrix(TRIANGLE)

    def test_two_sources_rejected(self):
        with pytest.raises(ValueError):
            instance_from_dict(
                {"source": {"matrix": TRIANGLE, "uniform": [2, 4]}}
            )

    def test_unknown_source_rejected(self):
        with pytest.raises(ValueError):
            instance_from_dict({"source": {"wheel": 4}})

    def test_load_file(self, tmp_path):
        path = tmp_path / "tri.json"
        path.write_text(json.dumps({"source": {"matrix": TRIANGLE}}))
        assert load_instance_file(str(path)) == build_from_matrix(TRIANGLE)

    def test_load_malformed_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ValueError):
            load_instance_file(str(path))
