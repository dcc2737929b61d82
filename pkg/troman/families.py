"""
# Graph families
Generators with a documented vertex numbering, closed-form expected values
and the structural recognizers behind the γ_tR = n and b_tR = ∞
characterizations.
"""

import math

from typing import (
    Dict,
    List,
    Optional,
    Text,
    Tuple,
)

from .constants import RE_FAMILY_SPEC
from .exceptions import (
    DisconnectedGraph,
    FamilySpecError,
    IsolatedVertexError,
    TromanError,
)
from .graph import Graph, VertexSet
from .utils import iter_bits

INFINITE = math.inf

ATTACH_IDENTIFY = 'identify'
ATTACH_PENDANT_PATH = 'pendant_path'

TAGS = {
    'complete': 'Complete',
    'path': 'Path',
    'cycle': 'Cycle',
    'wheel': 'Wheel',
    'kpq': 'CompleteBipartite',
    'star': 'Star',
    'bistar': 'Bistar',
    'spider': 'Spider',
    'broom': 'Broom',
    'doublebroom': 'DoubleBroom',
    'corona': 'Corona',
    'familyg': 'FamilyG',
    'familyh': 'FamilyH',
}
TEXT_NAMES = {
    'Complete': 'complete',
    'Path': 'path',
    'Cycle': 'cycle',
    'Wheel': 'wheel',
    'CompleteBipartite': 'kpq',
    'Star': 'star',
    'Bistar': 'bistar',
    'Spider': 'spider',
    'Broom': 'broom',
    'DoubleBroom': 'doublebroom',
    'Corona': 'corona',
    'FamilyG': 'familyG',
    'FamilyH': 'familyH',
}
ARITY = {
    'Complete': 1,
    'Path': 1,
    'Cycle': 1,
    'Wheel': 1,
    'CompleteBipartite': 2,
    'Star': 1,
    'Bistar': 2,
    'Spider': 2,
    'Broom': 2,
    'DoubleBroom': 3,
    'FamilyG': 2,
    'FamilyH': 3,
}


class FamilyGraph(object):
    """
    A generated graph plus its role map (role name -> vertex list).
    """

    def __init__(self, graph: Graph, roles: Dict[Text, List[int]]):
        self.graph = graph
        self.roles = roles

    def __repr__(self):
        return '<FamilyGraph({!r}, roles={})>'.format(self.graph, sorted(self.roles))


class ExpectedValue(object):
    """
    Closed-form values for a family member. None means no closed form is
    known and the value must be computed; b_tR may be INFINITE.
    """

    def __init__(self, gamma_tR: Optional[int], b_tR, provenance: Text):
        self.gamma_tR = gamma_tR
        self.b_tR = b_tR
        self.provenance = provenance

    def __repr__(self):
        return '<ExpectedValue(gamma_tR={}, b_tR={})>'.format(self.gamma_tR, self.b_tR)

    def to_dict(self):
        b_tR = self.b_tR
        if b_tR == INFINITE:
            b_tR = 'infinite'
        return {
            'gamma_tR': self.gamma_tR,
            'b_tR': b_tR,
            'provenance': self.provenance,
        }


class FamilySpec(object):
    """
    # FamilySpec
    Tagged descriptor of a named family member, e.g. Spider(2, 4). Corona
    carries its base graph instead of integers; FamilyG carries the reading
    of "attach a copy of P_3" in `attach`.
    """

    def __init__(
        self,
        tag: Text,
        params: Tuple[int, ...] = (),
        base: Graph = None,
        attach: Text = ATTACH_IDENTIFY,
    ):
        self.tag = tag
        self.params = tuple(params)
        self.base = base
        self.attach = attach
        self.validate()

    @classmethod
    def parse(cls, text: Text) -> 'FamilySpec':
        match = RE_FAMILY_SPEC.match(text or '')
        if not match:
            raise FamilySpecError(text, 'expected <family>:<parameters>')
        name, raw = match.groups()
        tag = TAGS.get(name.lower())
        if tag is None:
            raise FamilySpecError(text, 'unknown family {!r}'.format(name))
        if tag == 'Corona':
            return cls(tag, base=cls._parse_base(text, raw))
        tokens = [t.strip() for t in raw.split(',') if t.strip()]
        attach = ATTACH_IDENTIFY
        if tag == 'FamilyG' and tokens and tokens[-1] in (ATTACH_IDENTIFY, ATTACH_PENDANT_PATH):
            attach = tokens.pop()
        try:
            params = tuple(int(t) for t in tokens)
        except ValueError:
            raise FamilySpecError(text, 'parameters must be integers')
        try:
            return cls(tag, params, attach=attach)
        except FamilySpecError as exc:
            raise FamilySpecError(text, str(exc))

    @staticmethod
    def _parse_base(text: Text, raw: Text) -> Graph:
        from .io import parse_graph6

        try:
            if ':' in raw:
                return generate(FamilySpec.parse(raw)).graph
            return parse_graph6(raw)
        except TromanError as exc:
            raise FamilySpecError(text, 'bad corona base: {}'.format(exc))

    def __eq__(self, other):
        if not isinstance(other, FamilySpec):
            return NotImplemented
        return (self.tag, self.params, self.base, self.attach) == (
            other.tag, other.params, other.base, other.attach)

    def __hash__(self):
        return hash((self.tag, self.params, self.base, self.attach))

    def __repr__(self):
        if self.tag == 'Corona':
            return 'Corona({!r})'.format(self.base)
        return '{}({})'.format(self.tag, ', '.join(str(p) for p in self.params))

    def __str__(self):
        name = TEXT_NAMES[self.tag]
        if self.tag == 'Corona':
            from .io import emit_graph6

            return '{}:{}'.format(name, emit_graph6(self.base))
        text = '{}:{}'.format(name, ','.join(str(p) for p in self.params))
        if self.attach != ATTACH_IDENTIFY:
            text += ',' + self.attach
        return text

    def validate(self) -> None:
        tag = self.tag
        if tag == 'Corona':
            if self.base is None or self.base.n < 1:
                raise FamilySpecError(repr(self), 'corona needs a non-empty base graph')
            return
        if tag not in ARITY:
            raise FamilySpecError(tag, 'unknown family')
        if len(self.params) != ARITY[tag]:
            raise FamilySpecError(
                repr(self), 'expects {} parameter(s), got {}'.format(ARITY[tag], len(self.params)))
        if self.attach not in (ATTACH_IDENTIFY, ATTACH_PENDANT_PATH):
            raise FamilySpecError(repr(self), 'unknown attachment {!r}'.format(self.attach))
        p = self.params
        problem = None
        if tag in ('Complete', 'Path') and p[0] < 2:
            problem = 'order must be at least 2'
        elif tag == 'Cycle' and p[0] < 3:
            problem = 'cycle length must be at least 3'
        elif tag == 'Wheel' and p[0] < 3:
            problem = 'cycle length must be at least 3'
        elif tag == 'CompleteBipartite' and min(p) < 1:
            problem = 'both sides need at least one vertex'
        elif tag == 'Star' and p[0] < 1:
            problem = 'a star needs at least one leaf'
        elif tag == 'Bistar' and min(p) < 1:
            problem = 'each center needs at least one leaf'
        elif tag == 'Spider' and not (p[1] >= 2 and 0 <= p[0] <= p[1]):
            problem = 'requires t >= 2 and 0 <= k <= t'
        elif tag == 'Broom' and not (p[0] >= 3 and p[1] >= 2):
            problem = 'requires t >= 3 and d >= 2'
        elif tag == 'DoubleBroom' and not (p[0] >= 3 and p[1] >= 2 and p[2] >= 2):
            problem = "requires t >= 3 and d, d' >= 2"
        elif tag == 'FamilyG' and min(p) < 0:
            problem = 'attachment counts must be non-negative'
        elif tag == 'FamilyH' and not (p[0] >= 0 and p[1] >= 1 and p[2] >= 1):
            problem = 'requires r >= 0 and a, b >= 1'
        if problem:
            raise FamilySpecError(repr(self), problem)

    def generate(self) -> FamilyGraph:
        return generate(self)

    def expected(self) -> ExpectedValue:
        return expected(self)


# ---- generators -------------------------------------------------------------


def _build(n: int, edges, roles) -> FamilyGraph:
    return FamilyGraph(Graph.from_edge_list(n, edges), roles)


def _path_edges(vertices: List[int]):
    return list(zip(vertices, vertices[1:]))


def generate(spec: FamilySpec) -> FamilyGraph:
    """
    Numbering: family-defining vertices first (hub, head, centers), then
    peripherals in definition order.
    """
    tag = spec.tag
    p = spec.params
    if tag == 'Complete':
        n = p[0]
        return _build(n, [(u, v) for u in range(n) for v in range(u + 1, n)],
                      {'vertices': list(range(n))})
    if tag == 'Path':
        n = p[0]
        return _build(n, _path_edges(list(range(n))), {'path': list(range(n))})
    if tag == 'Cycle':
        n = p[0]
        return _build(n, _path_edges(list(range(n))) + [(n - 1, 0)], {'cycle': list(range(n))})
    if tag == 'Wheel':
        c = p[0]
        rim = list(range(1, c + 1))
        edges = [(0, v) for v in rim] + _path_edges(rim) + [(c, 1)]
        return _build(c + 1, edges, {'hub': [0], 'rim': rim})
    if tag == 'CompleteBipartite':
        a, b = p
        xs = list(range(a))
        ys = list(range(a, a + b))
        return _build(a + b, [(x, y) for x in xs for y in ys], {'X': xs, 'Y': ys})
    if tag == 'Star':
        t = p[0]
        leaves = list(range(1, t + 1))
        return _build(t + 1, [(0, v) for v in leaves], {'center': [0], 'leaves': leaves})
    if tag == 'Bistar':
        r, s = p
        first = list(range(2, r + 2))
        second = list(range(r + 2, r + s + 2))
        edges = [(0, 1)] + [(0, v) for v in first] + [(1, v) for v in second]
        return _build(r + s + 2, edges, {
            'centers': [0, 1],
            'leaves_0': first,
            'leaves_1': second,
        })
    if tag == 'Spider':
        return _spider(*p)
    if tag == 'Broom':
        t, d = p
        path = list(range(t))
        pendants = list(range(t, t + d))
        edges = _path_edges(path) + [(t - 1, v) for v in pendants]
        return _build(t + d, edges, {'path': path, 'pendants': pendants})
    if tag == 'DoubleBroom':
        t, d, d2 = p
        path = list(range(t))
        first = list(range(t, t + d))
        last = list(range(t + d, t + d + d2))
        edges = _path_edges(path) + [(0, v) for v in first] + [(t - 1, v) for v in last]
        return _build(t + d + d2, edges, {
            'path': path,
            'pendants_first': first,
            'pendants_last': last,
        })
    if tag == 'Corona':
        base = spec.base
        h = base.n
        pendants = list(range(h, 2 * h))
        edges = list(base.edges()) + [(i, h + i) for i in range(h)]
        return _build(2 * h, edges, {'base': list(range(h)), 'pendants': pendants})
    if tag == 'FamilyG':
        return _family_g(p[0], p[1], spec.attach)
    if tag == 'FamilyH':
        return _family_h(*p)
    raise FamilySpecError(repr(spec), 'no generator')


def _spider(k: int, t: int) -> FamilyGraph:
    wounded = list(range(1, k + 1))
    knees = list(range(k + 1, t + 1))
    feet = list(range(t + 1, 2 * t - k + 1))
    edges = [(0, v) for v in wounded + knees] + list(zip(knees, feet))
    return _build(2 * t - k + 1, edges, {
        'head': [0],
        'wounded_feet': wounded,
        'knees': knees,
        'feet': feet,
    })


def _family_g(k1: int, k2: int, attach: Text) -> FamilyGraph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    arm_length = 2 if attach == ATTACH_IDENTIFY else 3
    arms = []
    nxt = 4
    for anchor, copies in ((0, k1), (1, k2)):
        for _ in range(copies):
            arm = list(range(nxt, nxt + arm_length))
            nxt += arm_length
            edges.append((anchor, arm[0]))
            edges.extend(_path_edges(arm))
            arms.append(arm)
    return _build(nxt, edges, {
        'cycle': [0, 1, 2, 3],
        'arms': [v for arm in arms for v in arm],
    })


def _family_h(r: int, a: int, b: int) -> FamilyGraph:
    spine = [0] + list(range(2, r + 2)) + [1]
    edges = _path_edges(spine)
    knees = []
    feet = []
    nxt = r + 2
    for center, copies in ((0, a), (1, b)):
        for _ in range(copies):
            edges.extend([(center, nxt), (nxt, nxt + 1)])
            knees.append(nxt)
            feet.append(nxt + 1)
            nxt += 2
    return _build(nxt, edges, {
        'centers': [0, 1],
        'subdivision': list(range(2, r + 2)),
        'knees': knees,
        'feet': feet,
    })


# ---- expected values --------------------------------------------------------


def expected(spec: FamilySpec) -> ExpectedValue:
    tag = spec.tag
    p = spec.params
    if tag == 'Complete':
        n = p[0]
        if n <= 3:
            return ExpectedValue(n, INFINITE, 'K_2 and K_3 are a path and a cycle')
        return ExpectedValue(3, math.ceil(n / 2), 'b_tR(K_n) = ceil(n/2)')
    if tag in ('Path', 'Cycle'):
        return ExpectedValue(p[0], INFINITE, 'paths and cycles have gamma_tR = n')
    if tag == 'Wheel':
        graph = generate(spec).graph
        full = sum(1 for v in range(graph.n) if graph.degree(v) == graph.n - 1)
        return ExpectedValue(3, math.ceil(full / 2), 'b_tR = ceil(t/2) over full-degree vertices')
    if tag == 'CompleteBipartite':
        lo, hi = sorted(p)
        if lo == 1:
            return ExpectedValue(2 if hi == 1 else 3, INFINITE, 'K_{1,q} is a star')
        if hi == 2:
            return ExpectedValue(4, INFINITE, 'K_{2,2} is the cycle C_4')
        return ExpectedValue(4, lo, 'b_tR(K_{m,n}) = m for 2 <= m <= n, n >= 3')
    if tag == 'Star':
        return ExpectedValue(2 if p[0] == 1 else 3, INFINITE, 'stars have infinite b_tR')
    if tag == 'Bistar':
        return ExpectedValue(4, None, 'dominating edge between the centers')
    if tag == 'Spider':
        k, t = p
        if k == 0:
            return ExpectedValue(2 * t + 1, INFINITE, 'gamma_tR(S(0,r)) = 2r + 1')
        if k == 1:
            return ExpectedValue(2 * t, INFINITE, 'S(1,t) is the corona of a star')
        if k == t:
            return ExpectedValue(3, INFINITE, 'S(t,t) is a star')
        return ExpectedValue(None, t - k, 'b_tR(S(k,t)) = t - k')
    if tag in ('Broom', 'DoubleBroom'):
        return ExpectedValue(None, 1, 'b_tR = 1 for brooms and double brooms')
    if tag == 'Corona':
        return ExpectedValue(2 * spec.base.n, INFINITE, 'coronas have gamma_tR = n')
    if tag == 'FamilyG':
        if spec.attach != ATTACH_IDENTIFY:
            return ExpectedValue(None, None, 'no closed form under the pendant-path reading')
        n = 4 + 2 * sum(p)
        return ExpectedValue(n, INFINITE, 'family G has gamma_tR = n')
    if tag == 'FamilyH':
        r, a, b = p
        return ExpectedValue(2 + r + 2 * (a + b), INFINITE, 'family H has gamma_tR = n')
    raise FamilySpecError(repr(spec), 'no expected values')


# ---- recognizers ------------------------------------------------------------


def _degrees(graph: Graph) -> List[int]:
    return [a.bit_count() for a in graph.adj]


def match_star(graph: Graph) -> Optional[int]:
    """
    Center of K_{1,t} (t >= 1), or None.
    """
    if graph.n < 2 or not graph.is_tree():
        return None
    for v, d in enumerate(_degrees(graph)):
        if d == graph.n - 1:
            return v
    return None


def match_spider(graph: Graph) -> Optional[Tuple[int, int]]:
    """
    (k, t) when the graph is the spider S(k, t): a head of degree t whose
    neighbors are leaves (wounded feet) or degree-2 knees ending in a foot.
    """
    if not graph.is_tree():
        return None
    deg = _degrees(graph)
    adj = graph.adj
    for head in range(graph.n):
        t = deg[head]
        if t < 2:
            continue
        wounded = 0
        knees = 0
        for w in iter_bits(adj[head]):
            if deg[w] == 1:
                wounded += 1
            elif deg[w] == 2 and deg[(adj[w] & ~(1 << head)).bit_length() - 1] == 1:
                knees += 1
            else:
                break
        else:
            if graph.n == 1 + t + knees:
                return wounded, t
    return None


def match_path(graph: Graph) -> bool:
    return graph.n >= 2 and graph.is_tree() and graph.max_degree() <= 2


def match_cycle(graph: Graph) -> bool:
    return graph.n >= 3 and graph.is_connected() and all(d == 2 for d in _degrees(graph))


def match_corona(graph: Graph, connected_base: bool = True) -> Optional[VertexSet]:
    """
    Base vertex set when the graph is cor(H): every non-leaf has exactly one
    leaf neighbor and every leaf hangs off a non-leaf. K_2 is cor(K_1).
    """
    n = graph.n
    if n < 2 or n % 2:
        return None
    leaves = graph.leaves()
    if n == 2:
        return 1 if graph.m == 1 else None
    base = graph.vertex_set & ~leaves
    adj = graph.adj
    for v in range(n):
        if leaves >> v & 1:
            if adj[v] & leaves:
                return None
        elif (adj[v] & leaves).bit_count() != 1:
            return None
    if connected_base:
        sub, _ = graph.induced_subgraph(base)
        if not sub.is_connected():
            return None
    return base


def _two_core(graph: Graph) -> VertexSet:
    alive = graph.vertex_set
    adj = graph.adj
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            if (adj[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    return alive


def match_family_g(graph: Graph) -> Optional[Tuple[int, int]]:
    """
    (k1, k2) for a C_4 with k1 two-vertex arms at one cycle vertex and k2 at
    an adjacent one. k1 >= k2.
    """
    if not graph.is_connected() or graph.m != graph.n:
        return None
    core = _two_core(graph)
    adj = graph.adj
    if core.bit_count() != 4 or any((adj[v] & core).bit_count() != 2 for v in iter_bits(core)):
        return None
    deg = _degrees(graph)
    arms = {}
    for v in iter_bits(graph.vertex_set & ~core):
        anchor = adj[v] & core
        if anchor:
            rest = adj[v] & ~core
            if deg[v] != 2 or rest.bit_count() != 1 or deg[rest.bit_length() - 1] != 1:
                return None
            a = anchor.bit_length() - 1
            arms[a] = arms.get(a, 0) + 1
        elif deg[v] != 1 or not adj[adj[v].bit_length() - 1] & core:
            return None
    if len(arms) > 2:
        return None
    if len(arms) == 2:
        x, y = arms
        if not adj[x] >> y & 1:
            return None
    counts = sorted(arms.values(), reverse=True) + [0, 0]
    return counts[0], counts[1]


def match_family_h(graph: Graph) -> Optional[Tuple[int, int, int]]:
    """
    (r, a, b) for a bistar with a and b leaves whose pendant edges are
    subdivided once and whose central edge is subdivided r times.
    """
    if graph.n < 6 or not graph.is_tree():
        return None
    adj = graph.adj
    deg = _degrees(graph)
    feet = graph.leaves()
    knees = 0
    centers = {}
    for foot in iter_bits(feet):
        knee = adj[foot].bit_length() - 1
        if deg[knee] != 2 or knees >> knee & 1:
            return None
        knees |= 1 << knee
        center = (adj[knee] & ~(1 << foot)).bit_length() - 1
        centers[center] = centers.get(center, 0) + 1
    if len(centers) != 2 or any(knees >> c & 1 or feet >> c & 1 for c in centers):
        return None
    x, y = sorted(centers)
    spine = graph.vertex_set & ~feet & ~knees
    sub, index_map = graph.induced_subgraph(spine)
    if not match_path(sub):
        return None
    ends = [index_map[v] for v in range(sub.n) if sub.degree(v) == 1]
    if sorted(ends) != [x, y]:
        return None
    return sub.n - 2, centers[x], centers[y]


def _require_component(graph: Graph, operation: Text) -> None:
    if graph.n == 0 or not graph.is_connected():
        raise DisconnectedGraph(operation)
    if graph.has_isolated_vertex():
        raise IsolatedVertexError(operation)


def recognize_gamma_tR_equals_n(graph: Graph) -> Optional[Text]:
    """
    Tag of the class that forces γ_tR = n on a connected graph, or None.
    """
    _require_component(graph, 'recognize_gamma_tR_equals_n')
    if match_path(graph) or match_cycle(graph):
        return 'PathOrCycle'
    if match_corona(graph, connected_base=False) is not None:
        return 'Corona'
    spider = match_spider(graph)
    if spider is not None and spider[0] == 0:
        return 'SubdividedStar'
    if match_family_g(graph) is not None:
        return 'FamilyG'
    if match_family_h(graph) is not None:
        return 'FamilyH'
    return None


def recognize_btR_infinite_class(graph: Graph) -> Optional[Text]:
    """
    First matching class of the b_tR = ∞ list, checked in list order.
    """
    _require_component(graph, 'recognize_btR_infinite_class')
    if match_star(graph) is not None:
        return 'Star'
    spider = match_spider(graph)
    if spider is not None and spider[0] == 0:
        return 'HealthySpider'
    if spider is not None and spider[0] == 1:
        return 'WoundedSpiderOneFoot'
    if match_path(graph):
        return 'Path'
    if match_cycle(graph):
        return 'Cycle'
    if match_corona(graph) is not None:
        return 'Corona'
    if match_family_g(graph) is not None:
        return 'FamilyG'
    if match_family_h(graph) is not None:
        return 'FamilyH'
    return None
