"""The expansion chains from theta(5) to K33 and K5."""

from __future__ import annotations

from collections import Counter

from rotsys import (
    are_isomorphic,
    complete,
    complete_bipartite,
    exhaustive_classes,
    trace_faces,
)
from rotsys.enumeration import (
    _edge_additions,
    _path_splits,
    _subdivide_and_join,
    pipeline_k33_stages,
    pipeline_k5_stages,
    theta5_classes,
)
from rotsys.canon import canonical_key, multigraph_key
from rotsys.core import k5_minus_edge


def _split(classes):
    orc = sum(1 for c in classes if c.chirality == "orientable")
    return orc, len(classes) - orc


class TestK5Chain:
    def test_t123_stage(self):
        st = pipeline_k5_stages()
        assert len(st.t123_iso) == 8
        assert len(st.t123) == 6
        assert _split(st.t123) == (2, 4)

    def test_k4_plus_stage(self):
        st = pipeline_k5_stages()
        assert len(st.k4_plus) == 5
        assert _split(st.k4_plus) == (2, 3)

    def test_w4_stage(self):
        st = pipeline_k5_stages()
        assert len(st.w4) == 4
        assert _split(st.w4) == (1, 3)
        # each W4 embedding has a single face of length 16
        for c in st.w4:
            assert c.face_degrees == (16,)

    def test_w4_addition_count_is_18_each(self):
        st = pipeline_k5_stages()
        key = multigraph_key(k5_minus_edge())
        for c in st.w4:
            assert len(_edge_additions(c.representative, key)) == 18

    def test_k4_plus_subdivide_join_count_is_24_each(self):
        st = pipeline_k5_stages()
        key = multigraph_key(k5_minus_edge())
        for c in st.k4_plus:
            assert len(_subdivide_and_join(c.representative, key)) == 24

    def test_k5_minus_stage(self):
        st = pipeline_k5_stages()
        assert st.k5_minus_candidates == (72, 120)
        assert len(st.k5_minus_iso) == 60
        assert len(st.k5_minus) == 39
        assert _split(st.k5_minus) == (21, 18)

    def test_k5_minus_matches_exhaustive(self):
        st = pipeline_k5_stages()
        exh = exhaustive_classes(k5_minus_edge(), genus=2, mode="iso")
        assert {c.canonical_key for c in exh} == {c.canonical_key for c in st.k5_minus_iso}

    def test_k5_stage(self):
        st = pipeline_k5_stages()
        assert len(st.k5_iso) == 45
        assert len(st.k5) == 31
        assert _split(st.k5) == (14, 17)
        assert Counter(c.group_order for c in st.k5) == {1: 27, 2: 1, 4: 2, 5: 1}
        (order5,) = [c for c in st.k5 if c.group_order == 5]
        assert order5.chirality == "non_orientable"

    def test_k5_matches_exhaustive(self):
        st = pipeline_k5_stages()
        exh = exhaustive_classes(complete(5), genus=2, mode="iso")
        assert {c.canonical_key for c in exh} == {c.canonical_key for c in st.k5_iso}
        exh_eq = exhaustive_classes(complete(5), genus=2, mode="equivalence")
        assert {c.canonical_key for c in exh_eq} == {c.canonical_key for c in st.k5}


class TestK33Chain:
    def test_classes(self):
        res = pipeline_k33_stages()
        assert len(res.classes) == 1
        assert res.classes[0].chirality == "non_orientable"
        exh = exhaustive_classes(complete_bipartite(3, 3), genus=2, mode="equivalence")
        assert res.classes[0].canonical_key == exh[0].canonical_key

    def test_no_completions_from_the_group10_class(self):
        res = pipeline_k33_stages()
        by_group = dict(zip((c.group_order for c in res.theta5), res.candidates_per_class))
        assert by_group[10] == 0
        assert by_group[2] == 4  # published count of labelled extensions via the central edge
        assert sum(res.candidates_per_class) > 0

    def test_all_completions_share_one_key_with_witnesses(self):
        k33_key = multigraph_key(complete_bipartite(3, 3))
        completions = []
        for c in theta5_classes():
            for first in _path_splits(c.representative, 1):
                for emb in _path_splits(first, 2):
                    if multigraph_key(emb.graph) == k33_key:
                        completions.append(emb)
        assert len(completions) == 9
        keys = {canonical_key(e) for e in completions}
        assert len(keys) == 1
        for other in completions[1:]:
            assert are_isomorphic(completions[0], other) is not None

    def test_completions_are_one_face_double_torus(self):
        res = pipeline_k33_stages()
        rep = res.classes[0].representative
        stats = trace_faces(rep).stats
        assert stats.f == 1 and stats.genus == 2
