from collections import deque
from typing import (
    Iterable,
    List,
    Optional,
    Tuple,
)

from .constants import VERTEX_CAP, WIDE_VERTEX_CAP
from .exceptions import (
    DisconnectedGraph,
    EdgeExists,
    GraphError,
    LoopEdge,
    NotAnEdge,
    VertexCapExceeded,
    VertexOutOfRange,
)
from .utils import iter_bits

# a VertexSet is a bitset over 0..n-1; bit v set means v is a member.
VertexSet = int
Edge = Tuple[int, int]
EdgeSet = Tuple[Edge, ...]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def canonical_edge_set(edges: Iterable[Edge]) -> EdgeSet:
    """
    Order every pair as (min, max), drop duplicates and sort lexicographically.
    """
    return tuple(sorted({canonical_edge(u, v) for u, v in edges}))


class Graph(object):
    """
    Immutable simple undirected graph over the vertices 0..n-1. Adjacency is
    kept as one neighbor bitset per vertex, so set algebra on neighborhoods is
    integer arithmetic. Isolated vertices are allowed here; the domination
    solvers reject them where their invariants are undefined.
    """

    __slots__ = ('_n', '_adj', '_m', '_full')

    def __init__(self, n: int, adj: Iterable[int], m: int = None):
        self._n = n
        self._adj = tuple(adj)
        self._full = (1 << n) - 1
        self._m = m if m is not None else sum(a.bit_count() for a in self._adj) // 2
        self._check()

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        return cls(n, (0,) * n, 0)

    @classmethod
    def from_edge_list(
        cls,
        n: int,
        edges: Iterable[Edge],
        cap: int = VERTEX_CAP,
    ) -> 'Graph':
        if n < 0:
            raise GraphError('vertex count must be non-negative, got {}'.format(n))
        if n > cap:
            raise VertexCapExceeded(n, cap)
        adj = [0] * n
        for u, v in edges:
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRange(w, n)
            if u == v:
                raise LoopEdge(u)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def _check(self) -> None:
        n = self._n
        if len(self._adj) != n:
            raise GraphError('adjacency has {} rows for order {}'.format(len(self._adj), n))
        degree_sum = 0
        for v, nbrs in enumerate(self._adj):
            if nbrs >> n:
                raise GraphError('vertex {} has a neighbor outside 0..{}'.format(v, n - 1))
            if nbrs >> v & 1:
                raise LoopEdge(v)
            for u in iter_bits(nbrs):
                if not self._adj[u] >> v & 1:
                    raise GraphError('asymmetric adjacency between {} and {}'.format(u, v))
            degree_sum += nbrs.bit_count()
        if degree_sum != 2 * self._m:
            raise GraphError('cached size {} disagrees with degree sum'.format(self._m))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        return '<Graph(n={}, m={})>'.format(self._n, self._m)

    def __reduce__(self):
        return (Graph, (self._n, self._adj, self._m))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def vertex_set(self) -> VertexSet:
        return self._full

    def _require_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise VertexOutOfRange(v, self._n)

    def has_edge(self, u: int, v: int) -> bool:
        self._require_vertex(u)
        self._require_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> EdgeSet:
        """
        All edges in canonical order: (min, max) pairs, lexicographic.
        """
        return tuple(
            (u, v)
            for u in range(self._n)
            for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))
        )

    def non_edges(self) -> EdgeSet:
        return tuple(
            (u, v)
            for u in range(self._n)
            for v in range(u + 1, self._n)
            if not self._adj[u] >> v & 1
        )

    def remove_edges(self, edges: Iterable[Edge]) -> 'Graph':
        adj = list(self._adj)
        removed = 0
        for u, v in canonical_edge_set(edges):
            if not (0 <= u < self._n and 0 <= v < self._n) or not adj[u] >> v & 1:
                raise NotAnEdge(u, v)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            removed += 1
        return Graph(self._n, adj, self._m - removed)

    def add_edge(self, u: int, v: int) -> 'Graph':
        self._require_vertex(u)
        self._require_vertex(v)
        if u == v:
            raise LoopEdge(u)
        if self._adj[u] >> v & 1:
            raise EdgeExists(u, v)
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self._n, adj, self._m + 1)

    # ---- local structure -------------------------------------------------

    def degree(self, v: int) -> int:
        self._require_vertex(v)
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        self._require_vertex(v)
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> VertexSet:
        self._require_vertex(v)
        return self._adj[v] | (1 << v)

    def neighborhood_of_set(self, vertices: VertexSet) -> VertexSet:
        """
        Open neighborhood N(S): every vertex adjacent to some member of S.
        """
        out = 0
        for v in iter_bits(vertices):
            out |= self._adj[v]
        return out

    def min_degree(self) -> int:
        return min((a.bit_count() for a in self._adj), default=0)

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self._adj), default=0)

    def has_isolated_vertex(self) -> bool:
        return any(a == 0 for a in self._adj)

    def leaves(self) -> VertexSet:
        out = 0
        for v, nbrs in enumerate(self._adj):
            if nbrs.bit_count() == 1:
                out |= 1 << v
        return out

    def leaf_neighbors(self, v: int) -> VertexSet:
        self._require_vertex(v)
        return self._adj[v] & self.leaves()

    def support_vertices(self) -> VertexSet:
        return self.neighborhood_of_set(self.leaves())

    def strong_support_vertices(self) -> VertexSet:
        leaves = self.leaves()
        out = 0
        for v, nbrs in enumerate(self._adj):
            if (nbrs & leaves).bit_count() >= 2:
                out |= 1 << v
        return out

    def epn(self, v: int, members: VertexSet) -> VertexSet:
        """
        S-external private neighbors of v: vertices outside S whose only
        neighbor in S is v.
        """
        self._require_vertex(v)
        if not members >> v & 1:
            raise GraphError('vertex {} is not a member of the given set'.format(v))
        out = 0
        bit = 1 << v
        for w in iter_bits(self._adj[v] & ~members):
            if self._adj[w] & members == bit:
                out |= 1 << w
        return out

    # ---- global structure ------------------------------------------------

    def components(self) -> List[VertexSet]:
        """
        Connected components as vertex sets, ordered by smallest member.
        """
        remaining = self._full
        out = []
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                grow = 0
                for v in iter_bits(frontier):
                    grow |= self._adj[v]
                frontier = grow & ~comp
                comp |= frontier
            out.append(comp)
            remaining &= ~comp
        return out

    def is_connected(self) -> bool:
        return self._n > 0 and len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self._m == self._n - 1

    def is_forest(self) -> bool:
        return self._m == self._n - len(self.components())

    def distances_from(self, source: int) -> List[Optional[int]]:
        self._require_vertex(source)
        dist = [None] * self._n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in iter_bits(self._adj[u]):
                if dist[w] is None:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def diameter(self) -> Optional[int]:
        if self._n == 0:
            return None
        if not self.is_connected():
            raise DisconnectedGraph('diameter')
        return max(max(self.distances_from(v)) for v in range(self._n))

    def girth(self) -> Optional[int]:
        """
        Length of a shortest cycle, or None for forests.
        """
        best = None
        for root in range(self._n):
            dist = [None] * self._n
            parent = [-1] * self._n
            dist[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                if best is not None and 2 * dist[u] + 1 >= best:
                    break
                for w in iter_bits(self._adj[u]):
                    if dist[w] is None:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        length = dist[u] + dist[w] + 1
                        if best is None or length < best:
                            best = length
        return best

    def disjoint_union(self, other: 'Graph') -> 'Graph':
        """
        Vertices of `other` are shifted by self.n.
        """
        n = self._n + other._n
        if n > WIDE_VERTEX_CAP:
            raise VertexCapExceeded(n, WIDE_VERTEX_CAP)
        adj = list(self._adj) + [a << self._n for a in other._adj]
        return Graph(n, adj, self._m + other._m)

    def induced_subgraph(self, vertices: VertexSet) -> Tuple['Graph', List[int]]:
        """
        Return G[S] together with the index map: new vertex i is old vertex
        index_map[i].
        """
        vertices &= self._full
        index_map = list(iter_bits(vertices))
        position = {old: new for new, old in enumerate(index_map)}
        adj = []
        for old in index_map:
            row = 0
            for w in iter_bits(self._adj[old] & vertices):
                row |= 1 << position[w]
            adj.append(row)
        return Graph(len(index_map), adj), index_map

    def delete_vertices(self, vertices: VertexSet) -> Tuple['Graph', List[int]]:
        return self.induced_subgraph(self._full & ~vertices)
