from typing import Iterable, Tuple

from .constants import LABEL_VALUES
from .exceptions import LabelingError
from .graph import Graph, VertexSet


class VertexLabeling(object):
    """
    # VertexLabeling
    A function V -> {0, 1, 2}. Weight is |V_1| + 2|V_2|. Instances are
    immutable and compare by value, so lexicographic order of labelings is
    the order of their value tuples.
    """

    __slots__ = ('_values', '_weight')

    def __init__(self, values: Iterable[int]):
        values = tuple(values)
        for v, x in enumerate(values):
            if x not in LABEL_VALUES:
                raise LabelingError('vertex {} has value {!r}'.format(v, x))
        self._values = values
        self._weight = sum(values)

    @classmethod
    def from_masks(cls, n: int, ones: VertexSet, twos: VertexSet) -> 'VertexLabeling':
        if ones & twos:
            raise LabelingError('a vertex cannot carry both 1 and 2')
        return cls(
            2 if twos >> v & 1 else (1 if ones >> v & 1 else 0)
            for v in range(n)
        )

    def __len__(self):
        return len(self._values)

    def __getitem__(self, v):
        return self._values[v]

    def __iter__(self):
        return iter(self._values)

    def __eq__(self, other):
        if not isinstance(other, VertexLabeling):
            return NotImplemented
        return self._values == other._values

    def __lt__(self, other):
        return self._values < other._values

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        return 'VertexLabeling({})'.format(''.join(str(x) for x in self._values))

    @property
    def values(self) -> Tuple[int, ...]:
        return self._values

    @property
    def weight(self) -> int:
        return self._weight

    def mask_of(self, value: int) -> VertexSet:
        mask = 0
        for v, x in enumerate(self._values):
            if x == value:
                mask |= 1 << v
        return mask

    @property
    def v0(self) -> VertexSet:
        return self.mask_of(0)

    @property
    def v1(self) -> VertexSet:
        return self.mask_of(1)

    @property
    def v2(self) -> VertexSet:
        return self.mask_of(2)

    @property
    def positive(self) -> VertexSet:
        return self.v1 | self.v2

    def to_dict(self):
        return {'values': list(self._values), 'weight': self._weight}


def _masks(graph: Graph, f: VertexLabeling) -> Tuple[VertexSet, VertexSet]:
    if len(f) != graph.n:
        raise LabelingError(
            'labeling has length {}, graph has order {}'.format(len(f), graph.n))
    return f.v2, f.positive


def _zeros_dominated(graph: Graph, twos: VertexSet, positive: VertexSet) -> bool:
    adj = graph.adj
    return all(
        adj[v] & twos
        for v in range(graph.n)
        if not positive >> v & 1
    )


def is_rdf(graph: Graph, f: VertexLabeling) -> bool:
    twos, positive = _masks(graph, f)
    return _zeros_dominated(graph, twos, positive)


def is_qtrdf(graph: Graph, f: VertexLabeling) -> bool:
    twos, positive = _masks(graph, f)
    if not _zeros_dominated(graph, twos, positive):
        return False
    adj = graph.adj
    return all(adj[v] & positive for v in range(graph.n) if twos >> v & 1)


def is_trdf(graph: Graph, f: VertexLabeling) -> bool:
    twos, positive = _masks(graph, f)
    if not _zeros_dominated(graph, twos, positive):
        return False
    adj = graph.adj
    return all(adj[v] & positive for v in range(graph.n) if positive >> v & 1)


def is_dominating_set(graph: Graph, members: VertexSet) -> bool:
    return graph.neighborhood_of_set(members) | members == graph.vertex_set


def is_total_dominating_set(graph: Graph, members: VertexSet) -> bool:
    return graph.neighborhood_of_set(members) == graph.vertex_set


def is_vertex_cover(graph: Graph, members: VertexSet) -> bool:
    return all(members >> u & 1 or members >> v & 1 for u, v in graph.edges())
