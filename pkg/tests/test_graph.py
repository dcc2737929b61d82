import networkx as nx
import pytest

from hypothesis import given, settings

from troman.exceptions import (
    DisconnectedGraph,
    EdgeExists,
    GraphError,
    LoopEdge,
    NotAnEdge,
    VertexCapExceeded,
    VertexOutOfRange,
)
from troman.families import FamilySpec
from troman.graph import Graph, canonical_edge_set
from troman.io import to_networkx
from troman.utils import mask_to_list, to_mask

from .strategies import graphs


def family(text):
    return FamilySpec.parse(text).generate().graph


class TestGraphConstruction(object):
    def test_edges_are_canonical_and_sorted(self):
        graph = Graph.from_edge_list(4, [(3, 2), (1, 0), (2, 1)])
        assert graph.edges() == ((0, 1), (1, 2), (2, 3))
        assert graph.m == 3

    def test_canonical_edge_set_drops_duplicates(self):
        assert canonical_edge_set([(2, 1), (1, 2), (0, 3)]) == ((0, 3), (1, 2))

    @pytest.mark.parametrize('edges, error', [
        ([(0, 4)], VertexOutOfRange),
        ([(1, 1)], LoopEdge),
    ])
    def test_bad_edges_rejected(self, edges, error):
        with pytest.raises(error):
            Graph.from_edge_list(4, edges)

    def test_vertex_cap(self):
        with pytest.raises(VertexCapExceeded):
            Graph.from_edge_list(65, [])
        assert Graph.from_edge_list(65, [], cap=128).n == 65

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(GraphError):
            Graph(2, [0b10, 0])

    def test_equality_and_hash_by_value(self):
        a = Graph.from_edge_list(3, [(0, 1), (1, 2)])
        b = Graph.from_edge_list(3, [(2, 1), (1, 0)])
        assert a == b
        assert len({a, b}) == 1

    def test_remove_and_add_edges(self):
        graph = family('cycle:4')
        path = graph.remove_edges([(3, 0)])
        assert path.m == 3
        assert not path.has_edge(0, 3)
        assert path.add_edge(0, 3) == graph
        with pytest.raises(NotAnEdge):
            path.remove_edges([(0, 3)])
        with pytest.raises(EdgeExists):
            graph.add_edge(0, 1)


class TestLocalStructure(object):
    def test_leaves_and_supports_of_a_spider(self):
        graph = family('spider:2,4')
        assert mask_to_list(graph.leaves()) == [1, 2, 5, 6]
        assert mask_to_list(graph.support_vertices()) == [0, 3, 4]
        assert mask_to_list(graph.strong_support_vertices()) == [0]
        assert mask_to_list(graph.leaf_neighbors(0)) == [1, 2]

    def test_epn(self):
        graph = family('path:5')
        members = to_mask([1, 3])
        assert mask_to_list(graph.epn(1, members)) == [0]
        assert mask_to_list(graph.epn(3, members)) == [4]
        with pytest.raises(GraphError):
            graph.epn(0, members)

    def test_neighborhoods(self):
        graph = family('star:3')
        assert graph.neighbors(0) == to_mask([1, 2, 3])
        assert graph.closed_neighborhood(1) == to_mask([0, 1])
        assert graph.neighborhood_of_set(to_mask([1, 2])) == to_mask([0])
        assert graph.min_degree() == 1
        assert graph.max_degree() == 3


class TestGlobalStructure(object):
    @pytest.mark.parametrize('spec, girth', [
        ('complete:4', 3),
        ('cycle:5', 5),
        ('kpq:2,3', 4),
        ('path:6', None),
        ('familyG:1,1', 4),
    ])
    def test_girth(self, spec, girth):
        assert family(spec).girth() == girth

    def test_petersen_girth_and_diameter(self):
        from troman.io import parse_graph6

        petersen = parse_graph6('IheA@GUAo')
        assert petersen.girth() == 5
        assert petersen.diameter() == 2

    def test_diameter_of_disconnected_graph_raises(self):
        graph = Graph.from_edge_list(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraph):
            graph.diameter()

    def test_tree_and_forest(self):
        assert family('spider:1,3').is_tree()
        forest = Graph.from_edge_list(5, [(0, 1), (2, 3), (3, 4)])
        assert forest.is_forest() and not forest.is_tree()
        assert not family('cycle:3').is_forest()

    def test_induced_subgraph_and_index_map(self):
        graph = family('wheel:4')
        rim, index_map = graph.delete_vertices(1)
        assert index_map == [1, 2, 3, 4]
        assert rim.m == 4 and rim.max_degree() == 2

    def test_disjoint_union_shifts_second_graph(self):
        union = family('path:2').disjoint_union(family('cycle:3'))
        assert union.n == 5
        assert union.edges() == ((0, 1), (2, 3), (2, 4), (3, 4))

    @settings(max_examples=80)
    @given(graphs(max_n=8))
    def test_components_agree_with_networkx(self, graph):
        expected = sorted(
            sorted(c) for c in nx.connected_components(to_networkx(graph))
        )
        assert sorted(mask_to_list(c) for c in graph.components()) == expected

    @settings(max_examples=60)
    @given(graphs(max_n=8, connected=True))
    def test_diameter_agrees_with_networkx(self, graph):
        assert graph.diameter() == nx.diameter(to_networkx(graph))

    @settings(max_examples=60)
    @given(graphs(max_n=7))
    def test_pickle_keeps_value(self, graph):
        import pickle

        assert pickle.loads(pickle.dumps(graph)) == graph
