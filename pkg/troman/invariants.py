"""
# Domination invariants
Exact solvers for γ, γ_t, β, γ_R, γ_qtR and γ_tR, plus brute-force oracles.

The three Roman-type numbers share one search: candidate sets V_2 are
enumerated by increasing cardinality. Vertices outside N[V_2] are forced to
1, and whatever positive vertex is still without a required positive neighbor
is repaired by a minimum cover taken from N(V_2) ∖ V_2. Disconnected graphs
are solved per component and summed.
"""

from functools import lru_cache
from itertools import combinations, count, product
from typing import (
    Callable,
    Dict,
    Iterator,
    List,
    Optional,
    Tuple,
)

from .constants import (
    ALL_FUNCTIONS_CAP,
    GAMMA_TR_CACHE_SIZE,
    LABEL_VALUES,
    ORACLE_CAP,
)
from .exceptions import CapExceeded, InconsistencyError, IsolatedVertexError
from .graph import Graph, VertexSet
from .labeling import (
    VertexLabeling,
    is_dominating_set,
    is_qtrdf,
    is_rdf,
    is_total_dominating_set,
    is_trdf,
    is_vertex_cover,
)
from .utils import iter_bits, mask_to_list, say

# rules for the positive part of a Roman labeling
TOTAL = 'total'    # every positive vertex needs a positive neighbor
QUASI = 'quasi'    # only 2-vertices need a positive neighbor
ROMAN = 'roman'    # no requirement

RULE_CHECKERS = {TOTAL: is_trdf, QUASI: is_qtrdf, ROMAN: is_rdf}

INVARIANT_NAMES = ('gamma', 'gamma_t', 'beta', 'gamma_R', 'gamma_qtR', 'gamma_tR')
ROMAN_RULES = {'gamma_R': ROMAN, 'gamma_qtR': QUASI, 'gamma_tR': TOTAL}
NEEDS_ISOLATE_FREE = frozenset({'gamma_t', 'gamma_qtR', 'gamma_tR'})

# log solver entry above this order
VERBOSE_ORDER = 16


def _require_isolate_free(graph: Graph, invariant: str) -> None:
    if graph.has_isolated_vertex():
        raise IsolatedVertexError(invariant)


def _split(graph: Graph) -> List[Tuple[Graph, List[int]]]:
    comps = graph.components()
    if len(comps) == 1:
        return [(graph, list(range(graph.n)))]
    return [graph.induced_subgraph(comp) for comp in comps]


def _lift_mask(mask: VertexSet, index_map: List[int]) -> VertexSet:
    out = 0
    for v in iter_bits(mask):
        out |= 1 << index_map[v]
    return out


def min_cover(
    adj: Tuple[int, ...],
    targets: VertexSet,
    candidates: VertexSet,
    limit: int,
) -> Optional[VertexSet]:
    """
    Smallest U ⊆ candidates such that every target has a neighbor in U,
    provided |U| < limit; None otherwise. Branches on the target with the
    fewest options, lowest vertex first, so the result is deterministic.
    """
    if not targets:
        return 0 if limit > 0 else None
    if limit <= 1:
        return None
    options = None
    for t in iter_bits(targets):
        opts = adj[t] & candidates
        if not opts:
            return None
        if options is None or opts.bit_count() < options.bit_count():
            options = opts
    reach = max((adj[u] & targets).bit_count() for u in iter_bits(candidates))
    if -(-targets.bit_count() // reach) >= limit:
        return None
    best = None
    for u in iter_bits(options):
        sub = min_cover(adj, targets & ~adj[u], candidates & ~(1 << u), limit - 1)
        if sub is not None:
            best = sub | (1 << u)
            limit = best.bit_count()
        candidates &= ~(1 << u)
    return best


class RomanSearch(object):
    """
    One exact search for the minimum weight of a Roman-type labeling below an
    exclusive `limit`. The best solution found is kept as (weight, twos, ones).
    """

    def __init__(self, graph: Graph, rule: str, limit: int):
        self.graph = graph
        self.rule = rule
        self.limit = limit
        self.best = None
        self.closed = [graph.adj[v] | (1 << v) for v in range(graph.n)]

    def needy(self, twos: VertexSet, fixed: VertexSet) -> VertexSet:
        if self.rule == ROMAN:
            return 0
        pool = fixed if self.rule == TOTAL else twos
        adj = self.graph.adj
        out = 0
        for v in iter_bits(pool):
            if not adj[v] & fixed:
                out |= 1 << v
        return out

    def evaluate(self, twos: VertexSet, dominated: VertexSet) -> None:
        forced = self.graph.vertex_set & ~dominated
        base = 2 * twos.bit_count() + forced.bit_count()
        if base >= self.limit:
            return
        fixed = twos | forced
        cover = min_cover(
            self.graph.adj,
            self.needy(twos, fixed),
            self.graph.vertex_set & ~fixed,
            self.limit - base,
        )
        if cover is not None:
            weight = base + cover.bit_count()
            self.best = (weight, twos, forced | cover)
            self.limit = weight

    def greedy(self) -> None:
        """
        Evaluate every prefix of a max-gain greedy choice of V_2 to tighten
        the limit before the exact search starts.
        """
        twos = 0
        dominated = 0
        full = self.graph.vertex_set
        while dominated != full:
            undominated = full & ~dominated
            gain, pick = max(
                ((self.closed[v] & undominated).bit_count(), -v)
                for v in range(self.graph.n)
            )
            if gain == 0:
                break
            twos |= 1 << -pick
            dominated |= self.closed[-pick]
            self.evaluate(twos, dominated)

    def run(self) -> Optional[Tuple[int, VertexSet, VertexSet]]:
        n = self.graph.n
        for k in count(0):
            if k > n or 2 * k >= self.limit:
                break
            self._descend(0, 0, 0, k)
        return self.best

    def _descend(self, start: int, twos: VertexSet, dominated: VertexSet, remaining: int) -> None:
        if remaining == 0:
            self.evaluate(twos, dominated)
            return
        n = self.graph.n
        if n - start < remaining:
            return
        undominated = self.graph.vertex_set & ~dominated
        gains = sorted(
            ((self.closed[v] & undominated).bit_count() for v in range(start, n)),
            reverse=True,
        )
        bound = (
            2 * (twos.bit_count() + remaining)
            + max(0, undominated.bit_count() - sum(gains[:remaining]))
        )
        if bound >= self.limit:
            return
        for v in range(start, n - remaining + 1):
            self._descend(v + 1, twos | (1 << v), dominated | self.closed[v], remaining - 1)
            if 2 * (twos.bit_count() + remaining) >= self.limit:
                return


def _roman_solve(
    graph: Graph,
    rule: str,
    upper_bound: int = None,
) -> Tuple[int, VertexSet, VertexSet]:
    if graph.n >= VERBOSE_ORDER:
        say('roman search', rule=rule, n=graph.n, m=graph.m, upper_bound=upper_bound)
    if upper_bound is not None:
        search = RomanSearch(graph, rule, upper_bound)
        found = search.run()
        if found is not None:
            return found
        say('upper bound not beaten, running full search', rule=rule, n=graph.n)
    # the all-ones labeling is always admissible, so n is attainable
    search = RomanSearch(graph, rule, graph.n + 1)
    search.greedy()
    if search.best is not None:
        # rerun at the greedy weight so the witness is the first optimum in
        # enumeration order
        search.limit = search.best[0] + 1
        search.best = None
    return search.run()


def _smallest_set(graph: Graph, accept: Callable[[VertexSet], bool]) -> VertexSet:
    """
    First vertex set in (size, lexicographic) order that `accept` admits.
    """
    for k in range(graph.n + 1):
        for combo in combinations(range(graph.n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if accept(mask):
                return mask
    raise InconsistencyError('smallest set search', _graph6(graph))


def _graph6(graph: Graph) -> str:
    from .io import emit_graph6

    return emit_graph6(graph)


def _solve_set_invariant(graph: Graph, name: str) -> VertexSet:
    if name == 'gamma':
        return _smallest_set(graph, lambda s: is_dominating_set(graph, s))
    if name == 'gamma_t':
        return _smallest_set(graph, lambda s: is_total_dominating_set(graph, s))
    return _smallest_set(graph, lambda s: is_vertex_cover(graph, s))


@lru_cache(maxsize=GAMMA_TR_CACHE_SIZE)
def _component_value(graph: Graph, name: str) -> int:
    if name in ROMAN_RULES:
        return _roman_solve(graph, ROMAN_RULES[name])[0]
    return _solve_set_invariant(graph, name).bit_count()


def invariant_value(graph: Graph, name: str) -> int:
    """
    Value of the named invariant, memoized per connected component.
    """
    if name in NEEDS_ISOLATE_FREE:
        _require_isolate_free(graph, name)
    return sum(_component_value(comp, name) for comp, _ in _split(graph))


def invariant_exceeds(graph: Graph, name: str, bound: int) -> bool:
    """
    Decide value > bound. Large connected graphs run a Roman search that
    stops at the first labeling of weight <= bound instead of solving.
    """
    if name in NEEDS_ISOLATE_FREE:
        _require_isolate_free(graph, name)
    if name in ROMAN_RULES and graph.n >= VERBOSE_ORDER and graph.is_connected():
        search = RomanSearch(graph, ROMAN_RULES[name], bound + 1)
        search.greedy()
        if search.best is not None:
            return False
        return search.run() is None
    return invariant_value(graph, name) > bound


# ---- γ_tR -------------------------------------------------------------------


def iter_labelings(graph: Graph, max_weight: int, rule: str = TOTAL) -> Iterator[VertexLabeling]:
    """
    Yield every labeling admissible under `rule` with weight ≤ max_weight, in
    lexicographic order of value tuples. A vertex is checked as soon as the
    last vertex of its closed neighborhood has been assigned.
    """
    n = graph.n
    adj = graph.adj
    closing = [[] for _ in range(n)]
    for v in range(n):
        closing[(adj[v] | (1 << v)).bit_length() - 1].append(v)
    values = [0] * n

    def admissible(v: int, twos: VertexSet, positive: VertexSet) -> bool:
        x = values[v]
        if x == 0:
            return bool(adj[v] & twos)
        if rule == TOTAL or (rule == QUASI and x == 2):
            return bool(adj[v] & positive)
        return True

    def visit(i: int, weight: int, twos: VertexSet, positive: VertexSet):
        if i == n:
            yield VertexLabeling(values)
            return
        bit = 1 << i
        for x in LABEL_VALUES:
            if weight + x > max_weight:
                break
            values[i] = x
            t = twos | bit if x == 2 else twos
            p = positive | bit if x else positive
            if all(admissible(v, t, p) for v in closing[i]):
                yield from visit(i + 1, weight + x, t, p)
        values[i] = 0

    yield from visit(0, 0, 0, 0)


def iter_trdfs(graph: Graph, max_weight: int) -> Iterator[VertexLabeling]:
    return iter_labelings(graph, max_weight, TOTAL)


def gamma_tR_value(graph: Graph, upper_bound: int = None) -> int:
    """
    γ_tR only. `upper_bound` is an exclusive bound known to be attainable;
    it narrows the search on connected graphs and is ignored otherwise.
    """
    _require_isolate_free(graph, 'gamma_tR')
    parts = _split(graph)
    if upper_bound is not None and len(parts) == 1:
        return _roman_solve(graph, TOTAL, upper_bound)[0]
    return sum(_component_value(comp, 'gamma_tR') for comp, _ in parts)


def _lex_first(graph: Graph, name: str) -> VertexLabeling:
    rule = ROMAN_RULES[name]
    weight = _component_value(graph, name)
    for labeling in iter_labelings(graph, weight, rule):
        return labeling
    raise InconsistencyError('{} witness search'.format(name), _graph6(graph))


def _merge_labelings(n: int, parts) -> VertexLabeling:
    values = [0] * n
    for labeling, index_map in parts:
        for v, x in enumerate(labeling):
            values[index_map[v]] = x
    return VertexLabeling(values)


def gamma_tR(graph: Graph) -> Tuple[int, VertexLabeling]:
    """
    γ_tR with the lexicographically smallest optimal labeling as witness.
    """
    _require_isolate_free(graph, 'gamma_tR')
    parts = [(_lex_first(comp, 'gamma_tR'), index_map) for comp, index_map in _split(graph)]
    witness = _merge_labelings(graph.n, parts)
    return witness.weight, witness


def roman_oracle(graph: Graph, rule: str = TOTAL, cap: int = ORACLE_CAP) -> int:
    """
    Minimum weight over all 3^n labelings accepted by the rule's checker.
    """
    if graph.n > cap:
        raise CapExceeded('3^n oracle', graph.n, cap)
    if rule != ROMAN:
        _require_isolate_free(graph, 'oracle')
    checker = RULE_CHECKERS[rule]
    best = 2 * graph.n + 1
    for values in product(LABEL_VALUES, repeat=graph.n):
        if sum(values) >= best:
            continue
        if checker(graph, VertexLabeling(values)):
            best = sum(values)
    return best


def gamma_tR_oracle(graph: Graph) -> int:
    _require_isolate_free(graph, 'gamma_tR')
    return roman_oracle(graph, TOTAL)


def all_gamma_tR_functions(graph: Graph, cap: int = ALL_FUNCTIONS_CAP) -> List[VertexLabeling]:
    if graph.n > cap:
        raise CapExceeded('all_gamma_tR_functions', graph.n, cap)
    weight = gamma_tR_value(graph)
    return list(iter_trdfs(graph, weight))


# ---- the other invariants ---------------------------------------------------


def _set_invariant(graph: Graph, name: str) -> Tuple[int, VertexSet]:
    if name in NEEDS_ISOLATE_FREE:
        _require_isolate_free(graph, name)
    witness = 0
    for comp, index_map in _split(graph):
        witness |= _lift_mask(_solve_set_invariant(comp, name), index_map)
    return witness.bit_count(), witness


def gamma(graph: Graph) -> Tuple[int, VertexSet]:
    return _set_invariant(graph, 'gamma')


def gamma_t(graph: Graph) -> Tuple[int, VertexSet]:
    return _set_invariant(graph, 'gamma_t')


def beta(graph: Graph) -> Tuple[int, VertexSet]:
    return _set_invariant(graph, 'beta')


def _roman_invariant(graph: Graph, name: str) -> Tuple[int, VertexLabeling]:
    if name in NEEDS_ISOLATE_FREE:
        _require_isolate_free(graph, name)
    parts = []
    for comp, index_map in _split(graph):
        _, twos, ones = _roman_solve(comp, ROMAN_RULES[name])
        parts.append((VertexLabeling.from_masks(comp.n, ones, twos), index_map))
    witness = _merge_labelings(graph.n, parts)
    return witness.weight, witness


def gamma_R(graph: Graph) -> Tuple[int, VertexLabeling]:
    return _roman_invariant(graph, 'gamma_R')


def gamma_qtR(graph: Graph) -> Tuple[int, VertexLabeling]:
    return _roman_invariant(graph, 'gamma_qtR')


# ---- report -----------------------------------------------------------------


class InvariantReport(object):
    """
    All six invariants of one isolate-free graph with a witness each. The
    inequality chains between them are checked on construction; a violation
    raises InconsistencyError carrying the graph.
    """

    def __init__(
        self,
        graph: Graph,
        values: Dict[str, int],
        witnesses: Dict[str, object],
    ):
        self.graph = graph
        self.values = dict(values)
        self.witnesses = dict(witnesses)
        broken = chain_violations(self.values)
        if broken:
            raise InconsistencyError('invariant chains ({})'.format(', '.join(broken)), _graph6(graph))

    @classmethod
    def compute(cls, graph: Graph) -> 'InvariantReport':
        _require_isolate_free(graph, 'invariant report')
        values = {}
        witnesses = {}
        for name, solve in (
            ('gamma', gamma),
            ('gamma_t', gamma_t),
            ('beta', beta),
            ('gamma_R', gamma_R),
            ('gamma_qtR', gamma_qtR),
            ('gamma_tR', gamma_tR),
        ):
            values[name], witnesses[name] = solve(graph)
        return cls(graph, values, witnesses)

    def __getattr__(self, name):
        if name in INVARIANT_NAMES:
            return self.__dict__['values'][name]
        raise AttributeError(name)

    def to_dict(self) -> Dict:
        witnesses = {}
        for name, witness in self.witnesses.items():
            if isinstance(witness, VertexLabeling):
                witnesses[name] = list(witness.values)
            else:
                witnesses[name] = mask_to_list(witness)
        data = {'n': self.graph.n}
        data.update(self.values)
        data['witnesses'] = witnesses
        return data


def chain_violations(values: Dict[str, int]) -> List[str]:
    """
    Names of the failed inequalities among γ, γ_t, β, γ_R, γ_qtR, γ_tR.
    """
    g = values['gamma']
    gt = values['gamma_t']
    b = values['beta']
    gr = values['gamma_R']
    gq = values['gamma_qtR']
    gtr = values['gamma_tR']
    checks = [
        ('gamma <= beta', g <= b),
        ('gamma <= gamma_t', g <= gt),
        ('gamma_R <= gamma_qtR <= gamma_tR', gr <= gq <= gtr),
        ('gamma_t <= gamma_tR <= 2 gamma_t', gt <= gtr <= 2 * gt),
        ('2 gamma <= gamma_tR <= 3 gamma', 2 * g <= gtr <= 3 * g),
        ('gamma <= gamma_R <= 2 gamma', g <= gr <= 2 * g),
    ]
    return [label for label, ok in checks if not ok]
