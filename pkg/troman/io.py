"""
Text formats for graphs: graph6 (bit packing delegated to networkx) and a
plain edge list whose first line is "n m" followed by m lines "u v".
"""

import networkx as nx

from typing import Text

from .constants import WIDE_VERTEX_CAP
from .exceptions import EdgeListError, Graph6Error, GraphError
from .graph import Graph

GRAPH6_HEADER = '>>graph6<<'


def parse_graph6(text: Text) -> Graph:
    if text is None:
        raise Graph6Error(text, 'no input')
    stripped = text.strip()
    if stripped.startswith(GRAPH6_HEADER):
        stripped = stripped[len(GRAPH6_HEADER):]
    if not stripped:
        raise Graph6Error(text, 'empty input')
    if any(not 63 <= ord(c) <= 126 for c in stripped):
        raise Graph6Error(text, 'characters outside the printable graph6 range')
    try:
        nx_graph = nx.from_graph6_bytes(stripped.encode('ascii'))
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise Graph6Error(text, str(exc) or exc.__class__.__name__)
    n = nx_graph.number_of_nodes()
    try:
        return Graph.from_edge_list(n, nx_graph.edges(), cap=WIDE_VERTEX_CAP)
    except GraphError as exc:
        raise Graph6Error(text, str(exc))


def emit_graph6(graph: Graph) -> Text:
    nx_graph = to_networkx(graph)
    return nx.to_graph6_bytes(nx_graph, header=False).decode('ascii').strip()


def to_networkx(graph: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.n))
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def parse_edge_list(text: Text) -> Graph:
    lines = [
        line.split() for line in (text or '').splitlines()
        if line.strip() and not line.lstrip().startswith('#')
    ]
    if not lines:
        raise EdgeListError('empty input')
    header = lines[0]
    if len(header) != 2:
        raise EdgeListError('header must be "n m", got {!r}'.format(' '.join(header)))
    try:
        n, m = int(header[0]), int(header[1])
        edges = [(int(row[0]), int(row[1])) for row in lines[1:] if len(row) == 2]
    except ValueError as exc:
        raise EdgeListError(str(exc))
    if len(edges) != len(lines) - 1:
        raise EdgeListError('every edge line must hold exactly two vertices')
    if len(edges) != m:
        raise EdgeListError('header announces {} edges, found {}'.format(m, len(edges)))
    try:
        return Graph.from_edge_list(n, edges, cap=WIDE_VERTEX_CAP)
    except GraphError as exc:
        raise EdgeListError(str(exc))


def emit_edge_list(graph: Graph) -> Text:
    lines = ['{} {}'.format(graph.n, graph.m)]
    lines.extend('{} {}'.format(u, v) for u, v in graph.edges())
    return '\n'.join(lines) + '\n'


def parse_graph_text(text: Text) -> Graph:
    """
    Accept either format: a first line made of two integers means an edge
    list, anything else is read as graph6.
    """
    first = next((line for line in (text or '').splitlines() if line.strip()), '')
    tokens = first.split()
    if len(tokens) == 2 and all(t.lstrip('-').isdigit() for t in tokens):
        return parse_edge_list(text)
    return parse_graph6(first)
