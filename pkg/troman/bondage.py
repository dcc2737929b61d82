"""
# Bondage numbers
Layered edge-subset searches for b, b_t, b_R, b_qtR and b_tR. Subsets are
tried by increasing size in lexicographic canonical edge order, so the first
success is the reported witness. b_tR = ∞ is decided structurally, never by
exhausting the search.
"""

import math

from functools import lru_cache
from itertools import combinations
from typing import (
    Dict,
    List,
    Optional,
    Text,
    Tuple,
)

from .constants import (
    ALL_FUNCTIONS_CAP,
    BONDAGE_CACHE_SIZE,
    BONDAGE_KINDS,
    EDGE_CUT_CAP,
    EXHAUSTIVE_BONDAGE_MAX_EDGES,
)
from .exceptions import (
    CapExceeded,
    InconsistencyError,
    IsolatedVertexError,
    UsageError,
)
from .families import recognize_btR_infinite_class
from .graph import Edge, EdgeSet, Graph
from .invariants import (
    all_gamma_tR_functions,
    gamma_tR_value,
    invariant_exceeds,
    invariant_value,
)
from .io import emit_graph6
from .labeling import VertexLabeling
from .utils import iter_bits, say, shout

# bondage kind -> (invariant, G - E' must stay isolate-free)
KIND_INVARIANTS = {
    'tr': ('gamma_tR', True),
    't': ('gamma_t', True),
    'qtr': ('gamma_qtR', True),
    'r': ('gamma_R', False),
    'plain': ('gamma', False),
}


class InfinityCertificate(object):
    """
    One b_tR = ∞ class tag per component, components ordered by their
    smallest vertex.
    """

    def __init__(self, classes: List[Text]):
        self.classes = list(classes)

    def __eq__(self, other):
        if not isinstance(other, InfinityCertificate):
            return NotImplemented
        return self.classes == other.classes

    def __repr__(self):
        return 'InfinityCertificate({})'.format(self.classes)

    def to_list(self) -> List[Dict]:
        return [
            {'component': i, 'class': tag}
            for i, tag in enumerate(self.classes)
        ]


class BondageResult(object):
    """
    # BondageResult
    Finite(value, witness), Infinite(certificate) or, for searches stopped
    by `max_size`, a lower bound. Infinite compares greater than every
    Finite, and a lower bound k compares like the number k.
    """

    FINITE = 'finite'
    INFINITE = 'infinite'
    LOWER_BOUND = 'lower_bound'

    def __init__(
        self,
        kind: Text,
        value: int = None,
        witness: EdgeSet = (),
        certificate: InfinityCertificate = None,
    ):
        self.kind = kind
        self.value = value
        self.witness = tuple(witness)
        self.certificate = certificate

    @classmethod
    def finite(cls, value: int, witness: EdgeSet) -> 'BondageResult':
        return cls(cls.FINITE, value, witness)

    @classmethod
    def infinite(cls, certificate: InfinityCertificate = None) -> 'BondageResult':
        return cls(cls.INFINITE, certificate=certificate or InfinityCertificate([]))

    @classmethod
    def at_least(cls, value: int) -> 'BondageResult':
        return cls(cls.LOWER_BOUND, value)

    @property
    def is_finite(self) -> bool:
        return self.kind == self.FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind == self.INFINITE

    def as_number(self):
        if self.is_infinite:
            return math.inf
        return self.value

    @staticmethod
    def _number(other):
        if isinstance(other, BondageResult):
            return other.as_number()
        return other

    def __eq__(self, other):
        if isinstance(other, BondageResult):
            return (self.kind, self.value, self.witness) == (other.kind, other.value, other.witness)
        return self.is_finite and self.value == other

    def __hash__(self):
        return hash((self.kind, self.value, self.witness))

    def __lt__(self, other):
        return self.as_number() < self._number(other)

    def __le__(self, other):
        return self.as_number() <= self._number(other)

    def __gt__(self, other):
        return self.as_number() > self._number(other)

    def __ge__(self, other):
        return self.as_number() >= self._number(other)

    def __repr__(self):
        if self.is_finite:
            return 'Finite({}, {})'.format(self.value, list(self.witness))
        if self.is_infinite:
            return 'Infinite({})'.format(self.certificate.classes)
        return 'AtLeast({})'.format(self.value)

    def to_dict(self) -> Dict:
        if self.is_finite:
            return {
                'kind': self.FINITE,
                'value': self.value,
                'witness': [list(e) for e in self.witness],
            }
        if self.is_infinite:
            return {'kind': self.INFINITE, 'certificate': self.certificate.to_list()}
        return {'kind': self.LOWER_BOUND, 'value': self.value}


def _kind(which: Text) -> Tuple[Text, bool]:
    try:
        return KIND_INVARIANTS[which]
    except KeyError:
        raise UsageError('bondage kind must be one of {}'.format(', '.join(BONDAGE_KINDS)))


def _layered_search(
    graph: Graph,
    which: Text,
    max_size: int = None,
    collect_all: bool = False,
) -> Optional[Tuple[int, List[EdgeSet]]]:
    """
    Smallest k with an admissible k-subset whose removal increases the
    invariant, and the first such subset (every such subset when
    `collect_all`). None when nothing up to `max_size` works.
    """
    name, isolate_free = _kind(which)
    base = invariant_value(graph, name)
    edges = graph.edges()
    top = len(edges) if max_size is None else min(max_size, len(edges))
    for k in range(1, top + 1):
        found = []
        admissible = 0
        for subset in combinations(edges, k):
            reduced = graph.remove_edges(subset)
            if isolate_free and reduced.has_isolated_vertex():
                continue
            admissible += 1
            if invariant_exceeds(reduced, name, base):
                if not collect_all:
                    return k, [subset]
                found.append(subset)
        say('bondage layer', which=which, k=k, admissible=admissible)
        if found:
            return k, found
    return None


def _require_isolate_free(graph: Graph, which: Text) -> None:
    if KIND_INVARIANTS[which][1] and graph.has_isolated_vertex():
        raise IsolatedVertexError('b_' + which)


def is_btR_infinite_structural(graph: Graph) -> Optional[InfinityCertificate]:
    if graph.has_isolated_vertex():
        raise IsolatedVertexError('b_tR')
    classes = []
    for comp in graph.components():
        sub, _ = graph.induced_subgraph(comp)
        tag = recognize_btR_infinite_class(sub)
        if tag is None:
            return None
        classes.append(tag)
    return InfinityCertificate(classes)


@lru_cache(maxsize=BONDAGE_CACHE_SIZE)
def _bondage(graph: Graph, which: Text) -> BondageResult:
    return _compute_bondage(graph, which, None)


def _compute_bondage(graph: Graph, which: Text, max_size: Optional[int]) -> BondageResult:
    if which == 'tr':
        certificate = is_btR_infinite_structural(graph)
        if certificate is not None:
            return BondageResult.infinite(certificate)
    found = _layered_search(graph, which, max_size)
    if found is not None:
        k, subsets = found
        return BondageResult.finite(k, subsets[0])
    if max_size is not None and max_size < graph.m:
        return BondageResult.at_least(max_size + 1)
    if which == 'tr':
        graph6 = emit_graph6(graph)
        shout('b_tR search exhausted without a witness', graph6=graph6)
        raise InconsistencyError('b_tR structural recognizer versus exhaustive search', graph6)
    return BondageResult.infinite()


def bondage(graph: Graph, which: Text = 'tr', max_size: int = None) -> BondageResult:
    """
    Bondage number of the given kind. With `max_size` the search stops at
    that subset size and may answer with a lower bound.
    """
    _kind(which)
    _require_isolate_free(graph, which)
    if max_size is None:
        return _bondage(graph, which)
    return _compute_bondage(graph, which, max_size)


def b_tR(graph: Graph, max_size: int = None) -> BondageResult:
    return bondage(graph, 'tr', max_size)


def b_t(graph: Graph, max_size: int = None) -> BondageResult:
    return bondage(graph, 't', max_size)


def b_qtR(graph: Graph, max_size: int = None) -> BondageResult:
    return bondage(graph, 'qtr', max_size)


def b_R(graph: Graph, max_size: int = None) -> BondageResult:
    return bondage(graph, 'r', max_size)


def b(graph: Graph, max_size: int = None) -> BondageResult:
    return bondage(graph, 'plain', max_size)


def minimum_witnesses(graph: Graph, which: Text = 'tr') -> List[EdgeSet]:
    """
    Every minimum bondage set, in lexicographic order. Empty when the
    bondage number is infinite.
    """
    _kind(which)
    _require_isolate_free(graph, which)
    if which == 'tr' and is_btR_infinite_structural(graph) is not None:
        return []
    found = _layered_search(graph, which, collect_all=True)
    return [] if found is None else found[1]


def exhaustive_bondage(
    graph: Graph,
    which: Text = 'tr',
    max_edges: int = EXHAUSTIVE_BONDAGE_MAX_EDGES,
) -> BondageResult:
    """
    The layered search run to exhaustion with no structural shortcut.
    Infinite results carry an empty certificate.
    """
    _kind(which)
    _require_isolate_free(graph, which)
    if graph.m > max_edges:
        raise CapExceeded('exhaustive bondage (edges)', graph.m, max_edges)
    found = _layered_search(graph, which)
    if found is None:
        return BondageResult.infinite()
    k, subsets = found
    return BondageResult.finite(k, subsets[0])


# ---- characterizations ------------------------------------------------------


def _kills(graph: Graph, f: VertexLabeling, u: int, v: int) -> bool:
    """
    True when f is no TRDF of G - uv: either the positive subgraph minus uv
    has an isolated vertex, or one endpoint is a 2 whose external private
    neighbor with value 0 is the other endpoint.
    """
    positive = f.positive
    twos = f.v2
    zeros = f.v0
    adj = graph.adj
    for x, y in ((u, v), (v, u)):
        if positive >> x & 1 and not adj[x] & positive & ~(1 << y):
            return True
    for x, y in ((u, v), (v, u)):
        if twos >> x & 1 and zeros >> y & 1 and graph.epn(x, twos) >> y & 1:
            return True
    return False


def btR_equals_one_characterization(
    graph: Graph,
    cap: int = ALL_FUNCTIONS_CAP,
) -> Tuple[bool, Optional[Edge]]:
    """
    Decide b_tR = 1 from the γ_tR-functions alone: look for an edge whose
    removal keeps the graph isolate-free and breaks every one of them.
    """
    if graph.has_isolated_vertex():
        raise IsolatedVertexError('b_tR')
    functions = all_gamma_tR_functions(graph, cap)
    for u, v in graph.edges():
        if graph.remove_edges([(u, v)]).has_isolated_vertex():
            continue
        if all(_kills(graph, f, u, v) for f in functions):
            return True, (u, v)
    return False, None


class SandwichReport(object):
    """
    γ_tR(G) + 1 <= γ_tR(G - B) <= γ_tR(G) + 2 for one b_tR-set B.
    """

    def __init__(self, witness: EdgeSet, before: int, after: int):
        self.witness = tuple(witness)
        self.before = before
        self.after = after

    @property
    def holds(self) -> bool:
        return self.before + 1 <= self.after <= self.before + 2

    @property
    def increase(self) -> int:
        return self.after - self.before

    @property
    def tight(self) -> Optional[Text]:
        if self.increase == 1:
            return 'lower'
        if self.increase == 2:
            return 'upper'
        return None

    def to_dict(self) -> Dict:
        return {
            'witness': [list(e) for e in self.witness],
            'gamma_tR': self.before,
            'gamma_tR_after': self.after,
            'holds': self.holds,
            'tight': self.tight,
        }


def sandwich_check(graph: Graph, every_witness: bool = False):
    """
    Check the two-sided bound for the reported b_tR-set, or for every
    minimum b_tR-set with `every_witness`. Returns one report or a list.
    """
    result = b_tR(graph)
    if not result.is_finite:
        raise UsageError('sandwich check needs a finite b_tR')
    before = gamma_tR_value(graph)
    witnesses = minimum_witnesses(graph) if every_witness else [result.witness]
    reports = [
        SandwichReport(w, before, gamma_tR_value(graph.remove_edges(w)))
        for w in witnesses
    ]
    for report in reports:
        if not report.holds:
            graph6 = emit_graph6(graph)
            shout('b_tR-set sandwich violated', graph6=graph6, witness=report.witness)
            raise InconsistencyError('b_tR-set sandwich', graph6)
    return reports if every_witness else reports[0]


def admissible_edge_cut(graph: Graph, cap: int = EDGE_CUT_CAP) -> Optional[Tuple[int, int]]:
    """
    Smallest k over vertex bipartitions (A, B) with G[A] and G[B] connected,
    δ(G[A]) >= 2 and δ(G[B]) >= 1, where k counts the edges between A and B.
    Returns (k, A) or None when no bipartition qualifies.
    """
    n = graph.n
    if n > cap:
        raise CapExceeded('admissible_edge_cut', n, cap)
    full = graph.vertex_set
    adj = graph.adj
    best = None
    for side in range(1, full):
        other = full & ~side
        if any((adj[v] & side).bit_count() < 2 for v in iter_bits(side)):
            continue
        if any(not adj[v] & other for v in iter_bits(other)):
            continue
        if not graph.induced_subgraph(side)[0].is_connected():
            continue
        if not graph.induced_subgraph(other)[0].is_connected():
            continue
        k = sum((adj[v] & other).bit_count() for v in iter_bits(side))
        if best is None or k < best[0]:
            best = (k, side)
    return best
