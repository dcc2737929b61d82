"""
# Theorem catalog
Every checkable statement about γ_tR and b_tR, one id each. A check looks
at one graph and answers HOLDS, VACUOUS (hypothesis not met) or a text
describing the violation. Bounds on b_tR are only evaluated on graphs with
finite b_tR. The bondage comparisons of T12 and the lower bound of T16 run
on every graph.
"""

import math

from itertools import combinations
from typing import (
    Callable,
    Dict,
    List,
    Optional,
    Text,
    Union,
)

from troman.bondage import (
    b,
    b_R,
    b_qtR,
    b_t,
    b_tR,
    btR_equals_one_characterization,
    admissible_edge_cut,
    exhaustive_bondage,
    is_btR_infinite_structural,
    sandwich_check,
)
from troman.constants import (
    ALL_FUNCTIONS_CAP,
    EDGE_CUT_CAP,
    EXHAUSTIVE_BONDAGE_MAX_EDGES,
    ORACLE_CAP,
)
from troman.families import recognize_gamma_tR_equals_n
from troman.graph import Graph, VertexSet
from troman.invariants import (
    InvariantReport,
    all_gamma_tR_functions,
    gamma_tR,
    gamma_tR_oracle,
    gamma_tR_value,
    invariant_value,
)
from troman.labeling import (
    is_dominating_set,
    is_qtrdf,
    is_rdf,
    is_total_dominating_set,
    is_trdf,
    is_vertex_cover,
)
from troman.utils import iter_bits

HOLDS = None
VACUOUS = 'vacuous'

Verdict = Union[None, Text]


class Theorem(object):
    """
    # Theorem
    A statement with its id, a check function and the largest graphs it is
    run on. Graphs beyond `max_n` vertices or `max_m` edges are skipped.
    """

    def __init__(
        self,
        tid: Text,
        statement: Text,
        check: Callable[[Graph], Verdict],
        max_n: int,
        max_m: Optional[int] = None,
    ):
        self.tid = tid
        self.statement = statement
        self.check = check
        self.max_n = max_n
        self.max_m = max_m

    def __repr__(self):
        return '<Theorem({})>'.format(self.tid)

    def caps(self) -> Dict:
        return {'max_n': self.max_n, 'max_m': self.max_m}


CATALOG: Dict[Text, Theorem] = {}


def theorem(tid: Text, statement: Text, max_n: int, max_m: int = None):
    def register(check):
        CATALOG[tid] = Theorem(tid, statement, check, max_n, max_m)
        return check
    return register


def theorem_ids() -> List[Text]:
    return sorted(CATALOG, key=lambda tid: int(tid[1:]))


def _verdict(ok: bool, detail: Text) -> Verdict:
    return HOLDS if ok else detail


def _in_finite_class(graph: Graph) -> bool:
    return is_btR_infinite_structural(graph) is None


def _dominating_edge(graph: Graph) -> bool:
    full = graph.vertex_set
    return any(
        graph.closed_neighborhood(u) | graph.closed_neighborhood(v) == full
        for u, v in graph.edges()
    )


def _full_degree_count(graph: Graph) -> int:
    return sum(1 for v in range(graph.n) if graph.degree(v) == graph.n - 1)


def _is_matching(graph: Graph) -> bool:
    return all(comp.bit_count() == 2 for comp in graph.components())


def _girth_cycles(graph: Graph, length: int) -> List[VertexSet]:
    """
    Vertex sets of the cycles of the given length. Each cycle is grown from
    its smallest vertex through larger vertices only.
    """
    found = set()
    adj = graph.adj

    def grow(start, last, used, size):
        if size == length:
            if adj[last] >> start & 1:
                found.add(used)
            return
        for nxt in iter_bits(adj[last] & ~used):
            if nxt > start:
                grow(start, nxt, used | 1 << nxt, size + 1)

    for s in range(graph.n):
        grow(s, s, 1 << s, 1)
    return sorted(found)


# ---- γ_tR statements --------------------------------------------------------


@theorem('T1', 'gamma_tR agrees with the exhaustive 3^n oracle', max_n=ORACLE_CAP)
def check_oracle(graph: Graph) -> Verdict:
    value, witness = gamma_tR(graph)
    oracle = gamma_tR_oracle(graph)
    if not is_trdf(graph, witness) or witness.weight != value:
        return 'witness {!r} is not a TRDF of weight {}'.format(witness, value)
    return _verdict(value == oracle, 'solver {} vs oracle {}'.format(value, oracle))


@theorem('T2', 'inequality chains among gamma, gamma_t, beta, gamma_R, gamma_qtR, gamma_tR', max_n=10)
def check_chains(graph: Graph) -> Verdict:
    report = InvariantReport.compute(graph)
    w = report.witnesses
    problems = []
    if not (is_dominating_set(graph, w['gamma']) and w['gamma'].bit_count() == report.gamma):
        problems.append('gamma witness')
    if not (is_total_dominating_set(graph, w['gamma_t']) and w['gamma_t'].bit_count() == report.gamma_t):
        problems.append('gamma_t witness')
    if not (is_vertex_cover(graph, w['beta']) and w['beta'].bit_count() == report.beta):
        problems.append('beta witness')
    if not (is_rdf(graph, w['gamma_R']) and w['gamma_R'].weight == report.gamma_R):
        problems.append('gamma_R witness')
    if not (is_qtrdf(graph, w['gamma_qtR']) and w['gamma_qtR'].weight == report.gamma_qtR):
        problems.append('gamma_qtR witness')
    return _verdict(not problems, 'invalid: ' + ', '.join(problems))


@theorem('T3', 'connected, n >= 3: gamma_tR = gamma_t + 1 iff max degree is n - 1', max_n=12)
def check_gamma_t_plus_one(graph: Graph) -> Verdict:
    if graph.n < 3 or not graph.is_connected():
        return VACUOUS
    left = gamma_tR_value(graph) == invariant_value(graph, 'gamma_t') + 1
    right = graph.max_degree() == graph.n - 1
    return _verdict(left == right, 'gamma_tR = gamma_t + 1 is {}, full degree is {}'.format(left, right))


@theorem('T4', 'gamma_tR = gamma_t iff every component is K_2, and then b_tR is infinite', max_n=12)
def check_gamma_t_equal(graph: Graph) -> Verdict:
    left = gamma_tR_value(graph) == invariant_value(graph, 'gamma_t')
    right = _is_matching(graph)
    if left != right:
        return 'gamma_tR = gamma_t is {}, all components K_2 is {}'.format(left, right)
    if right and _in_finite_class(graph):
        return 'union of K_2 with finite b_tR'
    return HOLDS


@theorem('T5', 'support vertices are positive in every gamma_tR-function', max_n=9)
def check_supports_positive(graph: Graph) -> Verdict:
    supports = graph.support_vertices()
    if not supports:
        return VACUOUS
    for f in all_gamma_tR_functions(graph, ALL_FUNCTIONS_CAP):
        if supports & f.v0:
            return 'support vertex labeled 0 by {!r}'.format(f)
    return HOLDS


@theorem('T6', 'gamma_tR = 3 iff max degree is n - 1 (n >= 3); gamma_t = 2 iff a dominating edge exists', max_n=12)
def check_small_values(graph: Graph) -> Verdict:
    left = invariant_value(graph, 'gamma_t') == 2
    right = _dominating_edge(graph)
    if left != right:
        return 'gamma_t = 2 is {}, dominating edge is {}'.format(left, right)
    if graph.n >= 3:
        left = gamma_tR_value(graph) == 3
        right = graph.max_degree() == graph.n - 1
        if left != right:
            return 'gamma_tR = 3 is {}, full degree is {}'.format(left, right)
    return HOLDS


@theorem('T7', 't >= 1 vertices of full degree, n >= 3, finite b_tR: b_tR = ceil(t / 2)', max_n=9, max_m=16)
def check_full_degree_bondage(graph: Graph) -> Verdict:
    t = _full_degree_count(graph)
    if graph.n < 3 or t < 1 or not _in_finite_class(graph):
        return VACUOUS
    result = b_tR(graph)
    expected = math.ceil(t / 2)
    return _verdict(result == expected, 'b_tR {!r}, expected {}'.format(result, expected))


@theorem('T8', 'n >= 3: gamma_tR = 4 iff G = 2K_2 or (max degree <= n - 2 and a dominating edge exists)', max_n=12)
def check_gamma_tR_four(graph: Graph) -> Verdict:
    if graph.n < 3:
        return VACUOUS
    left = gamma_tR_value(graph) == 4
    two_k2 = graph.n == 4 and _is_matching(graph)
    right = two_k2 or (graph.max_degree() <= graph.n - 2 and _dominating_edge(graph))
    return _verdict(left == right, 'gamma_tR = 4 is {}, structure says {}'.format(left, right))


@theorem('T9', 'adding an edge lowers gamma_tR by at most 2 and never raises it', max_n=10)
def check_edge_addition(graph: Graph) -> Verdict:
    non_edges = graph.non_edges()
    if not non_edges:
        return VACUOUS
    base = gamma_tR_value(graph)
    for u, v in non_edges:
        after = gamma_tR_value(graph.add_edge(u, v))
        if not base - 2 <= after <= base:
            return 'adding {}-{} gives {} from {}'.format(u, v, after, base)
    return HOLDS


@theorem('T10', 'connected: the gamma_tR = n recognizer matches the solver', max_n=10)
def check_gamma_tR_equals_n(graph: Graph) -> Verdict:
    if not graph.is_connected():
        return VACUOUS
    tag = recognize_gamma_tR_equals_n(graph)
    value = gamma_tR_value(graph)
    return _verdict(
        (tag is not None) == (value == graph.n),
        'recognizer {!r}, gamma_tR {} on n = {}'.format(tag, value, graph.n),
    )


@theorem('T11', 'structural b_tR = infinity certificate iff exhaustive search finds no witness',
         max_n=8, max_m=EXHAUSTIVE_BONDAGE_MAX_EDGES)
def check_infinity(graph: Graph) -> Verdict:
    certificate = is_btR_infinite_structural(graph)
    searched = exhaustive_bondage(graph, 'tr')
    return _verdict(
        (certificate is not None) == searched.is_infinite,
        'certificate {!r}, exhaustive search {!r}'.format(certificate, searched),
    )


# ---- b_tR statements --------------------------------------------------------


@theorem('T12', 'conditional comparisons of b, b_t, b_R, b_qtR and b_tR', max_n=7, max_m=10)
def check_bondage_comparisons(graph: Graph) -> Verdict:
    # infinite bondage numbers compare as math.inf
    g = invariant_value(graph, 'gamma')
    gt = invariant_value(graph, 'gamma_t')
    gr = invariant_value(graph, 'gamma_R')
    gq = invariant_value(graph, 'gamma_qtR')
    gtr = gamma_tR_value(graph)
    # item 7 fails on C_4, where b_tR is infinite and b = 3
    items = [
        (1, g == gt, lambda: b_t(graph) <= b(graph)),
        (2, gr == gq, lambda: b_qtR(graph) <= b_R(graph)),
        (3, gq == gtr, lambda: b_tR(graph) <= b_qtR(graph)),
        (4, gr == gtr, lambda: b_tR(graph) <= b_qtR(graph) and b_qtR(graph) <= b_R(graph)),
        (5, gt == gtr, lambda: b_tR(graph) <= b_t(graph)),
        (6, gtr == 2 * gt, lambda: b_t(graph) <= b_tR(graph)),
        (7, 2 * g == gtr and _in_finite_class(graph), lambda: b_tR(graph) <= b(graph)),
        (8, gtr == 3 * g, lambda: b(graph) <= b_tR(graph)),
        (9, g == gr, lambda: b_R(graph) <= b(graph)),
        (10, gr == 2 * g, lambda: b(graph) <= b_R(graph)),
    ]
    applicable = [(item, holds) for item, hyp, holds in items if hyp]
    if not applicable:
        return VACUOUS
    broken = [str(item) for item, holds in applicable if not holds()]
    return _verdict(not broken, 'items violated: ' + ', '.join(broken))


@theorem('T13', 'a b_tR-set raises gamma_tR by 1 or 2', max_n=8, max_m=14)
def check_sandwich(graph: Graph) -> Verdict:
    if not _in_finite_class(graph):
        return VACUOUS
    report = sandwich_check(graph)
    return _verdict(report.holds, 'increase {}'.format(report.increase))


@theorem('T14', 'gamma_tR = gamma_t + 2 implies b_tR <= b_t', max_n=8, max_m=12)
def check_m1(graph: Graph) -> Verdict:
    if not _in_finite_class(graph):
        return VACUOUS
    if gamma_tR_value(graph) != invariant_value(graph, 'gamma_t') + 2:
        return VACUOUS
    left, right = b_tR(graph), b_t(graph)
    return _verdict(left <= right, 'b_tR {!r} > b_t {!r}'.format(left, right))


@theorem('T15', 'gamma_tR = 4 implies b_tR = b_t', max_n=8, max_m=12)
def check_four_equal(graph: Graph) -> Verdict:
    if not _in_finite_class(graph) or gamma_tR_value(graph) != 4:
        return VACUOUS
    left, right = b_tR(graph), b_t(graph)
    return _verdict(left.as_number() == right.as_number(), 'b_tR {!r}, b_t {!r}'.format(left, right))


@theorem('T16', 'gamma_tR = 3 beta implies b_tR >= max(min degree, b)', max_n=8, max_m=12)
def check_vertex_cover(graph: Graph) -> Verdict:
    # a lower bound, so infinite b_tR is checked too
    if gamma_tR_value(graph) != 3 * invariant_value(graph, 'beta'):
        return VACUOUS
    result = b_tR(graph)
    plain = b(graph)
    ok = result >= graph.min_degree() and result >= plain
    return _verdict(ok, 'b_tR {!r}, min degree {}, b {!r}'.format(result, graph.min_degree(), plain))


def _support_pair_bounds(graph: Graph) -> List[tuple]:
    """
    (label, bound) pairs from adjacent support vertices and, on trees, from
    a vertex with exactly one non-leaf neighbor.
    """
    leaves = graph.leaves()
    supports = graph.support_vertices()
    bounds = []
    for u, v in graph.edges():
        for x, y in ((u, v), (v, u)):
            r = graph.leaf_neighbors(y).bit_count()
            if supports >> x & 1 and r >= 2:
                bounds.append(('adjacent supports {}-{}'.format(x, y), graph.degree(y) - r))
    if graph.is_tree():
        for x in range(graph.n):
            if leaves >> x & 1:
                continue
            inner = graph.neighbors(x) & ~leaves
            if inner.bit_count() != 1:
                continue
            v = inner.bit_length() - 1
            r = graph.leaf_neighbors(x).bit_count()
            k = graph.leaf_neighbors(v).bit_count()
            if k >= 1 and r >= 2:
                bounds.append(('rooted at {} with r = {}, k = {}'.format(x, r, k), 1))
            elif k >= 2 and r == 1:
                bounds.append(('rooted at {} with r = 1, k = {}'.format(x, k), graph.degree(v) - k))
    return bounds


@theorem('T17', 'support-vertex bounds: b_tR <= deg(v) - |L(v)| and the rooted-tree cases', max_n=9, max_m=12)
def check_support_bounds(graph: Graph) -> Verdict:
    if not _in_finite_class(graph):
        return VACUOUS
    bounds = _support_pair_bounds(graph)
    if not bounds:
        return VACUOUS
    result = b_tR(graph)
    broken = [label for label, bound in bounds if not result <= bound]
    return _verdict(not broken, 'b_tR {!r} above bound for {}'.format(result, '; '.join(broken)))


@theorem('T18', 'gamma_tR = 4 implies b_tR <= n - 1', max_n=8, max_m=14)
def check_four_bound(graph: Graph) -> Verdict:
    if not _in_finite_class(graph) or gamma_tR_value(graph) != 4:
        return VACUOUS
    result = b_tR(graph)
    return _verdict(result <= graph.n - 1, 'b_tR {!r} > n - 1'.format(result))


@theorem('T19', 'spanning subgraphs H = G - E\' with equal gamma_tR: b_tR(H) <= b_tR(G) <= b_tR(H) + |E\'|',
         max_n=7, max_m=9)
def check_spanning_subgraphs(graph: Graph) -> Verdict:
    if not _in_finite_class(graph):
        return VACUOUS
    base = gamma_tR_value(graph)
    whole = b_tR(graph).as_number()
    checked = 0
    for k in (1, 2):
        for removed in combinations(graph.edges(), k):
            sub = graph.remove_edges(removed)
            if sub.has_isolated_vertex() or gamma_tR_value(sub) != base:
                continue
            if not _in_finite_class(sub):
                continue
            checked += 1
            part = b_tR(sub).as_number()
            if not part <= whole <= part + k:
                return 'removing {} gives b_tR(H) = {}, b_tR(G) = {}'.format(list(removed), part, whole)
    return HOLDS if checked else VACUOUS


@theorem('T20', 'the gamma_tR-function characterization decides b_tR = 1', max_n=8, max_m=12)
def check_btR_one(graph: Graph) -> Verdict:
    if not _in_finite_class(graph):
        return VACUOUS
    decided, edge = btR_equals_one_characterization(graph, ALL_FUNCTIONS_CAP)
    result = b_tR(graph)
    actual = result.is_finite and result.value == 1
    return _verdict(decided == actual, 'characterization {} ({}), b_tR {!r}'.format(decided, edge, result))


@theorem('T21', 'min degree >= 2 and a unique gamma_tR-function imply b_tR = 1', max_n=8, max_m=14)
def check_unique_function(graph: Graph) -> Verdict:
    if graph.min_degree() < 2 or not _in_finite_class(graph):
        return VACUOUS
    if len(all_gamma_tR_functions(graph, ALL_FUNCTIONS_CAP)) != 1:
        return VACUOUS
    result = b_tR(graph)
    return _verdict(result == 1, 'b_tR {!r}'.format(result))


@theorem('T22', '4-clique Q with G - Q isolate-free: b_tR <= sum of degrees on Q - 10', max_n=8, max_m=16)
def check_clique(graph: Graph) -> Verdict:
    if not _in_finite_class(graph):
        return VACUOUS
    bounds = []
    for quad in combinations(range(graph.n), 4):
        if not all(graph.has_edge(u, v) for u, v in combinations(quad, 2)):
            continue
        rest, _ = graph.delete_vertices(sum(1 << v for v in quad))
        if rest.has_isolated_vertex():
            continue
        bounds.append((quad, sum(graph.degree(v) for v in quad) - 10))
    if not bounds:
        return VACUOUS
    result = b_tR(graph)
    broken = [quad for quad, bound in bounds if not result <= bound]
    return _verdict(not broken, 'b_tR {!r} above bound for cliques {}'.format(result, broken))


def _strong_support_pair(graph: Graph) -> Optional[tuple]:
    """
    A strong support v with a non-leaf neighbor a such that N(a) misses
    N(v) and N(b) for every neighbor b of a.
    """
    leaves = graph.leaves()
    for v in iter_bits(graph.strong_support_vertices()):
        for a in iter_bits(graph.neighbors(v) & ~leaves):
            na = graph.neighbors(a)
            if all(not na & (graph.neighbors(v) | graph.neighbors(x)) for x in iter_bits(na)):
                return v, a
    return None


@theorem('T23', 'n >= 5, strong support v with a non-leaf neighbor a whose neighborhood avoids N(v) and N(b) for b in N(a): b_tR <= n - 4',
         max_n=9, max_m=12)
def check_strong_support_pair(graph: Graph) -> Verdict:
    if graph.n < 5 or not _in_finite_class(graph):
        return VACUOUS
    pair = _strong_support_pair(graph)
    if pair is None:
        return VACUOUS
    result = b_tR(graph)
    return _verdict(result <= graph.n - 4, 'b_tR {!r} > n - 4 at {}'.format(result, pair))


@theorem('T24', 'n >= 5, a strong support vertex and (girth >= 4 or a tree): b_tR <= n - 4', max_n=9, max_m=12)
def check_strong_support_girth(graph: Graph) -> Verdict:
    if graph.n < 5 or not graph.strong_support_vertices() or not _in_finite_class(graph):
        return VACUOUS
    girth = graph.girth()
    if not (graph.is_tree() or girth is None or girth >= 4):
        return VACUOUS
    result = b_tR(graph)
    return _verdict(result <= graph.n - 4, 'b_tR {!r} > n - 4'.format(result))


@theorem('T25', 'connected, girth >= 5, a girth cycle C with G - V(C) isolate-free: b_tR <= n - girth - 1',
         max_n=10, max_m=14)
def check_girth(graph: Graph) -> Verdict:
    if not graph.is_connected():
        return VACUOUS
    girth = graph.girth()
    if girth is None or girth < 5:
        return VACUOUS
    usable = [
        cycle for cycle in _girth_cycles(graph, girth)
        if not graph.delete_vertices(cycle)[0].has_isolated_vertex()
    ]
    if not usable or not _in_finite_class(graph):
        return VACUOUS
    result = b_tR(graph)
    bound = graph.n - girth - 1
    return _verdict(result <= bound, 'b_tR {!r} > {}'.format(result, bound))


@theorem('T26', 'admissible edge cut of size k: b_tR <= 3 max degree + k - 4', max_n=EDGE_CUT_CAP, max_m=14)
def check_edge_cut(graph: Graph) -> Verdict:
    if not graph.is_connected() or not _in_finite_class(graph):
        return VACUOUS
    cut = admissible_edge_cut(graph, EDGE_CUT_CAP)
    if cut is None:
        return VACUOUS
    k, _ = cut
    bound = 3 * graph.max_degree() + k - 4
    result = b_tR(graph)
    return _verdict(result <= bound, 'b_tR {!r} > {} (cut size {})'.format(result, bound, k))
