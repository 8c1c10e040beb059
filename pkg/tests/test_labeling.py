"""Classification of set-labelings and the structural equivalences."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from iasltools.graph import (
    complete_graph, cycle_graph, empty_graph, enumerate_graphs, path_graph,
)
from iasltools.intset import IntegerSet, iset, sumset
from iasltools.labeling import (
    LabelingError, SetLabeling, classify, ground_set, induced_edge_label,
    labeling_from_json, labeling_to_json, strong_structure_check,
    weak_structure_check,
)


def lab(g, *labels):
    return SetLabeling(g, [iset(*l) if isinstance(l, tuple) else iset(l)
                           for l in labels])


class TestSetLabeling:
    def test_label_count_must_match(self):
        with pytest.raises(LabelingError):
            SetLabeling(path_graph(3), [iset(1), iset(2)])

    def test_non_injective_is_allowed(self):
        # injectivity is a verdict, not a precondition
        f = lab(complete_graph(2), 1, 1)
        assert not classify(f).is_iasl

    def test_induced_edge_label(self):
        f = lab(path_graph(3), 1, 2, 4)
        assert induced_edge_label(f, 0, 1) == iset(3)
        assert induced_edge_label(f, 1, 0) == iset(3)
        with pytest.raises(LabelingError):
            induced_edge_label(f, 0, 2)

    def test_ground_set(self):
        f = lab(path_graph(2), (0, 5), (2, 5))
        assert ground_set(f) == (0, 2, 5)


class TestClassify:
    def test_singleton_edge(self):
        rep = classify(lab(complete_graph(2), 1, 2))
        assert rep.is_iasl and rep.is_iasi
        assert rep.is_weak and rep.is_strong
        assert rep.edge_uniform_k == 1
        assert rep.vertex_uniform_l == 1
        assert rep.completely_uniform == (1, 1)
        assert not rep.vacuous_edges

    def test_powers_of_two_on_c4(self):
        rep = classify(lab(cycle_graph(4), 1, 2, 4, 8))
        assert rep.is_iasl and rep.is_iasi
        labels = [r.label for r in rep.per_edge]
        assert labels == [iset(3), iset(9), iset(6), iset(12)]

    def test_vertex_duplicate_witnessed(self):
        rep = classify(lab(path_graph(3), 3, 1, 3))
        assert not rep.is_iasl
        kinds = {v.kind: v for v in rep.violations}
        assert kinds["vertex-label-duplicate"].where == (0, 2)

    def test_edge_duplicate_with_distinct_vertex_labels(self):
        # {1,3}+{0,1} and {1,2,3}+{0,1} are both {1,2,3,4}
        f = lab(path_graph(3), (1, 3), (0, 1), (1, 2, 3))
        rep = classify(f)
        assert rep.is_iasl
        assert not rep.is_iasi
        kinds = {v.kind: v for v in rep.violations}
        assert kinds["edge-label-duplicate"].where == ((0, 1), (1, 2))

    def test_both_verdicts_reported_independently(self):
        # duplicate vertex labels on a graph with no edges: IASL no, IASI yes
        rep = classify(lab(empty_graph(2), 1, 1))
        assert not rep.is_iasl
        assert rep.is_iasi
        assert rep.vacuous_edges

    def test_weak_failure_witnessed(self):
        rep = classify(lab(complete_graph(2), (1, 2), (3, 4)))
        assert not rep.is_weak
        kinds = {v.kind for v in rep.violations}
        assert "weak-failure" in kinds

    def test_strong_without_weak(self):
        # |{0,1}+{0,2}| = 4 = product but > max
        rep = classify(lab(complete_graph(2), (0, 1), (0, 2)))
        assert rep.is_strong and not rep.is_weak

    def test_triangle_three_uniform(self):
        rep = classify(lab(complete_graph(3), (0, 1), (1, 2), (2, 3)))
        assert rep.is_iasl and rep.is_iasi
        assert rep.edge_uniform_k == 3
        assert rep.vertex_uniform_l == 2
        assert rep.completely_uniform == (3, 2)
        assert not rep.is_weak

    def test_per_edge_neglect(self):
        rep = classify(lab(complete_graph(2), (0, 1), (0, 1)))
        rec = rep.per_edge[0]
        assert rec.size == 3
        assert rec.neglecting_number == 1

    def test_report_json_shape(self):
        rep = classify(lab(complete_graph(2), 1, 2))
        payload = json.loads(json.dumps(rep.to_json()))
        assert payload["is_iasl"] is True
        assert payload["per_edge"][0]["label"] == [3]


class TestStructureChecks:
    def test_weak_iff_singleton_endpoint(self):
        good = lab(path_graph(3), 1, (0, 2), 2)
        ok, witness = weak_structure_check(good)
        assert ok and witness is None
        bad = lab(path_graph(2), (0, 1), (0, 2))
        ok, witness = weak_structure_check(bad)
        assert not ok and witness == (0, 1)

    def test_strong_shared_difference_witnessed(self):
        f = lab(complete_graph(2), (0, 1), (2, 3))
        ok, witness = strong_structure_check(f)
        assert not ok
        edge, shared = witness
        assert edge == (0, 1)
        assert 1 in shared

    def test_strong_on_disjoint_differences(self):
        ok, witness = strong_structure_check(lab(complete_graph(2), (0, 1), (0, 2)))
        assert ok and witness is None


# every labeling of every graph with <= 3 edges over tiny label space
_SMALL_GRAPHS = [g for n in range(4) for g in enumerate_graphs(n) if g.edge_count <= 3]
_LABELS = [IntegerSet(s) for s in
           [(a,) for a in range(4)] + [(a, b) for a in range(4) for b in range(a + 1, 4)]]


class TestEquivalencesExhaustive:
    def test_weak_and_strong_match_structure(self):
        from itertools import product as iproduct
        for g in _SMALL_GRAPHS:
            for combo in iproduct(range(len(_LABELS)), repeat=g.vertex_count):
                f = SetLabeling(g, [_LABELS[i] for i in combo])
                rep = classify(f)
                assert rep.is_weak == weak_structure_check(f)[0]
                assert rep.is_strong == strong_structure_check(f)[0]

    def test_edge_sizes_match_arithmetic(self):
        from itertools import product as iproduct
        g = path_graph(3)
        for combo in iproduct(range(len(_LABELS)), repeat=3):
            f = SetLabeling(g, [_LABELS[i] for i in combo])
            for rec in classify(f).per_edge:
                assert rec.size == len(sumset(f.labels[rec.u], f.labels[rec.v]))


graphs_strategy = st.sampled_from(
    [g for n in range(5) for g in enumerate_graphs(n)]
)
label_strategy = st.frozensets(st.integers(0, 6), min_size=1, max_size=3)


class TestEquivalencesProperty:
    @settings(max_examples=300, deadline=None)
    @given(graphs_strategy, st.data())
    def test_random_labelings(self, g, data):
        labels = [
            IntegerSet(data.draw(label_strategy)) for _ in range(g.vertex_count)
        ]
        f = SetLabeling(g, labels)
        rep = classify(f)
        assert rep.is_weak == weak_structure_check(f)[0]
        assert rep.is_strong == strong_structure_check(f)[0]
        assert rep.is_iasl == (len(set(labels)) == g.vertex_count)
        if rep.edge_uniform_k is not None and g.edges:
            sizes = {r.size for r in rep.per_edge}
            assert sizes == {rep.edge_uniform_k}


class TestJson:
    def test_round_trip(self):
        f = lab(cycle_graph(4), 1, 2, 4, 8)
        back = labeling_from_json(labeling_to_json(f))
        assert back == f

    def test_payload_shape(self):
        f = lab(complete_graph(2), (0, 2), 1)
        payload = labeling_to_json(f)
        assert payload == {"graph6": "A_", "labels": [[0, 2], [1]]}

    def test_bad_payloads(self):
        with pytest.raises((LabelingError, ValueError, KeyError)):
            labeling_from_json({"graph6": "A_"})
        with pytest.raises((LabelingError, ValueError)):
            labeling_from_json({"graph6": "A_", "labels": [[0]]})
