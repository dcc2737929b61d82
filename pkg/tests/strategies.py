from itertools import combinations

from hypothesis import strategies as st

from troman.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7, isolate_free=False, connected=False):
    """
    Random labeled graphs; with `isolate_free` a graph with an isolated
    vertex gets a path through its vertices added.
    """
    lower = max(min_n, 2) if isolate_free or connected else min_n
    n = draw(st.integers(min_value=lower, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [pair for pair, flag in zip(pairs, flags) if flag]
    graph = Graph.from_edge_list(n, edges)
    if (isolate_free and graph.has_isolated_vertex()) or (connected and not graph.is_connected()):
        edges = set(edges) | {(v, v + 1) for v in range(n - 1)}
        graph = Graph.from_edge_list(n, edges)
    return graph
