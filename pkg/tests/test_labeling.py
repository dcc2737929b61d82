import pytest

from troman.exceptions import LabelingError
from troman.families import FamilySpec
from troman.labeling import (
    VertexLabeling,
    is_dominating_set,
    is_qtrdf,
    is_rdf,
    is_total_dominating_set,
    is_trdf,
    is_vertex_cover,
)
from troman.utils import to_mask


def family(text):
    return FamilySpec.parse(text).generate().graph


class TestVertexLabeling(object):
    def test_weight_and_masks(self):
        f = VertexLabeling([2, 1, 0, 2])
        assert f.weight == 5
        assert f.v2 == to_mask([0, 3])
        assert f.v1 == to_mask([1])
        assert f.v0 == to_mask([2])
        assert f.positive == to_mask([0, 1, 3])
        assert f.to_dict() == {'values': [2, 1, 0, 2], 'weight': 5}

    def test_from_masks(self):
        f = VertexLabeling.from_masks(4, ones=to_mask([1]), twos=to_mask([0, 3]))
        assert f == VertexLabeling([2, 1, 0, 2])
        with pytest.raises(LabelingError):
            VertexLabeling.from_masks(3, ones=1, twos=1)

    def test_order_is_lexicographic(self):
        labelings = [VertexLabeling(v) for v in ([1, 1, 1], [0, 1, 2], [0, 2, 1])]
        assert sorted(labelings)[0] == VertexLabeling([0, 1, 2])

    def test_out_of_range_value(self):
        with pytest.raises(LabelingError):
            VertexLabeling([0, 3, 1])


class TestPredicates(object):
    def test_cycle_with_adjacent_twos(self):
        graph = family('cycle:4')
        f = VertexLabeling([2, 2, 0, 0])
        assert is_trdf(graph, f)
        assert is_qtrdf(graph, f)
        assert is_rdf(graph, f)

    def test_cycle_with_isolated_two_is_not_total(self):
        graph = family('cycle:4')
        f = VertexLabeling([2, 1, 0, 0])
        assert not is_rdf(graph, f)
        assert not is_trdf(graph, f)

    def test_all_ones_is_total_on_isolate_free_graph(self):
        graph = family('spider:2,4')
        assert is_trdf(graph, VertexLabeling([1] * graph.n))

    def test_edge_with_single_two(self):
        graph = family('path:2')
        f = VertexLabeling([2, 0])
        assert is_rdf(graph, f)
        assert not is_qtrdf(graph, f)
        assert not is_trdf(graph, f)

    def test_star_center_two(self):
        graph = family('star:3')
        f = VertexLabeling([2, 0, 0, 0])
        assert is_rdf(graph, f)
        assert not is_qtrdf(graph, f)
        assert not is_trdf(graph, f)
        g = VertexLabeling([2, 1, 0, 0])
        assert is_qtrdf(graph, g) and is_trdf(graph, g)

    def test_quasi_total_allows_lonely_one(self):
        # vertex 3 carries 1 with only a 0 beside it
        graph = family('path:4')
        f = VertexLabeling([1, 2, 0, 1])
        assert is_qtrdf(graph, f)
        assert not is_trdf(graph, f)
        g = VertexLabeling([1, 2, 2, 1])
        assert is_trdf(graph, g)
        h = VertexLabeling([0, 2, 1, 1])
        assert is_trdf(graph, h)

    def test_length_mismatch(self):
        with pytest.raises(LabelingError):
            is_trdf(family('path:3'), VertexLabeling([1, 1]))


class TestVertexSets(object):
    def test_dominating_sets_of_a_path(self):
        graph = family('path:5')
        assert is_dominating_set(graph, to_mask([1, 3]))
        assert not is_total_dominating_set(graph, to_mask([1, 3]))
        assert is_total_dominating_set(graph, to_mask([1, 2, 3]))

    def test_vertex_cover(self):
        graph = family('cycle:4')
        assert is_vertex_cover(graph, to_mask([0, 2]))
        assert not is_vertex_cover(graph, to_mask([0, 1]))
