import networkx as nx
import pytest

from hypothesis import given, settings

from troman.exceptions import EdgeListError, Graph6Error
from troman.graph import Graph
from troman.io import (
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    parse_graph_text,
    to_networkx,
)

from .strategies import graphs


class TestGraph6(object):
    @pytest.mark.parametrize('text, n, edges', [
        ('A_', 2, ((0, 1),)),
        ('C~', 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
        ('Ch', 4, ((0, 1), (1, 2), (2, 3))),
    ])
    def test_known_strings(self, text, n, edges):
        graph = parse_graph6(text)
        assert graph.n == n
        assert graph.edges() == edges
        assert emit_graph6(graph) == text

    def test_header_and_whitespace_are_ignored(self):
        assert parse_graph6('>>graph6<<C~\n') == parse_graph6('C~')

    def test_petersen(self):
        graph = parse_graph6('IheA@GUAo')
        assert (graph.n, graph.m) == (10, 15)
        assert all(graph.degree(v) == 3 for v in range(10))

    @pytest.mark.parametrize('text', ['', '   ', 'C ~', 'C'])
    def test_malformed(self, text):
        with pytest.raises(Graph6Error):
            parse_graph6(text)

    @settings(max_examples=80)
    @given(graphs(max_n=9))
    def test_emit_matches_networkx_bytes(self, graph):
        expected = nx.to_graph6_bytes(to_networkx(graph), header=False).decode().strip()
        assert emit_graph6(graph) == expected
        assert parse_graph6(expected) == graph


class TestEdgeList(object):
    def test_parse(self):
        graph = parse_edge_list('4 3\n0 1\n# comment\n1 2\n2 3\n')
        assert graph == Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])

    def test_emit(self):
        graph = Graph.from_edge_list(3, [(1, 2), (0, 1)])
        assert emit_edge_list(graph) == '3 2\n0 1\n1 2\n'

    @pytest.mark.parametrize('text', [
        '',
        '3\n0 1\n',
        '3 2\n0 1\n',
        '3 1\n0 1 2\n',
        '3 1\n0 5\n',
        '3 1\nx y\n',
    ])
    def test_malformed(self, text):
        with pytest.raises(EdgeListError):
            parse_edge_list(text)


class TestGraphText(object):
    def test_edge_list_detected(self):
        assert parse_graph_text('2 1\n0 1\n') == parse_graph6('A_')

    def test_graph6_detected(self):
        assert parse_graph_text('C~\n').m == 6
