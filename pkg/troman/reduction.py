"""
# 3-SAT to TR-bondage
Builds the graph of the hardness construction from a 3-CNF formula and checks
its three claims with the exact solvers:

- γ_tR(G) = 4n + 3 exactly when the formula is satisfiable;
- γ_tR(G - e) <= 4n + 4 for every edge e;
- γ_tR(G) = 4n + 3 exactly when b_tR(G) = 1.

Every variable gets a 7-vertex gadget, every clause one vertex, and a
4-vertex graph on o, p, q, r closes the construction.
"""

from itertools import product
from typing import (
    Dict,
    List,
    Optional,
    Sequence,
    Text,
    Tuple,
)

from .constants import REDUCTION_SOLVER_CAP, SAT_CAP, WIDE_VERTEX_CAP
from .exceptions import CapExceeded, DimacsError, FormulaError, NotAnEdge
from .graph import Edge, Graph, canonical_edge
from .invariants import gamma_tR_value, invariant_exceeds
from .io import emit_graph6
from .labeling import VertexLabeling, is_trdf
from .utils import say, shout

# (variable index, polarity); polarity True is the positive literal
Literal = Tuple[int, bool]
Clause = Tuple[Literal, Literal, Literal]

GADGET_ROLES = ('u', 't', 'ubar', 'a', 's', 'b', 'd')
GADGET_EDGES = (
    ('u', 't'), ('t', 'ubar'),
    ('u', 'a'), ('u', 'b'), ('ubar', 'a'), ('ubar', 'b'),
    ('a', 's'), ('s', 'b'), ('a', 'd'), ('b', 'd'),
)
CLOSING_ROLES = ('o', 'p', 'q', 'r')
CLOSING_EDGES = (('p', 'q'), ('p', 'o'), ('o', 'q'), ('q', 'r'), ('r', 'p'))


class CnfFormula(object):
    """
    A 3-CNF formula over variables 0..num_vars-1. Every clause holds three
    literals on three distinct variables.
    """

    def __init__(self, num_vars: int, clauses: Sequence[Sequence[Literal]]):
        self.num_vars = num_vars
        self.clauses = tuple(tuple((int(v), bool(p)) for v, p in c) for c in clauses)
        self.validate()

    def validate(self) -> None:
        if self.num_vars < 0:
            raise FormulaError('negative variable count')
        for j, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise FormulaError('clause {} has {} literals, expected 3'.format(j + 1, len(clause)))
            variables = [v for v, _ in clause]
            if any(not 0 <= v < self.num_vars for v in variables):
                raise FormulaError('clause {} uses a variable outside 1..{}'.format(j + 1, self.num_vars))
            if len(set(variables)) != 3:
                raise FormulaError('clause {} mentions a variable twice'.format(j + 1))

    def __eq__(self, other):
        if not isinstance(other, CnfFormula):
            return NotImplemented
        return (self.num_vars, self.clauses) == (other.num_vars, other.clauses)

    def __repr__(self):
        return '<CnfFormula(n={}, m={})>'.format(self.num_vars, len(self.clauses))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(
            any(assignment[v] == polarity for v, polarity in clause)
            for clause in self.clauses
        )

    def to_dimacs(self) -> Text:
        lines = ['p cnf {} {}'.format(self.num_vars, self.num_clauses)]
        for clause in self.clauses:
            lines.append(' '.join(
                str(v + 1) if polarity else str(-(v + 1))
                for v, polarity in clause
            ) + ' 0')
        return '\n'.join(lines) + '\n'


def parse_dimacs(text: Text) -> CnfFormula:
    """
    Read DIMACS CNF. Comment lines start with 'c'; a '%' line ends the
    clause section. A trailing clause without its terminating 0 is accepted.
    """
    header = None
    clauses = []
    current = []
    for lineno, raw in enumerate((text or '').splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('c'):
            continue
        if line.startswith('%'):
            break
        if line.startswith('p'):
            parts = line.split()
            if header is not None:
                raise DimacsError('second problem line', lineno)
            if len(parts) != 4 or parts[1] != 'cnf':
                raise DimacsError('problem line must read "p cnf <vars> <clauses>"', lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsError('non-integer counts in problem line', lineno)
            continue
        if header is None:
            raise DimacsError('clause before the problem line', lineno)
        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise DimacsError('bad literal {!r}'.format(token), lineno)
            if value == 0:
                clauses.append(_close_clause(current, header[0], lineno))
                current = []
                continue
            current.append(value)
    if header is None:
        raise DimacsError('missing problem line')
    if current:
        clauses.append(_close_clause(current, header[0], None))
    if len(clauses) != header[1]:
        raise DimacsError('problem line announces {} clauses, found {}'.format(header[1], len(clauses)))
    try:
        return CnfFormula(header[0], clauses)
    except FormulaError as exc:
        raise DimacsError(str(exc))


def _close_clause(values: List[int], num_vars: int, lineno: Optional[int]) -> List[Literal]:
    if len(values) != 3:
        raise DimacsError('clause width {}, expected 3'.format(len(values)), lineno)
    literals = []
    for value in values:
        if abs(value) > num_vars:
            raise DimacsError('variable {} exceeds the declared {}'.format(abs(value), num_vars), lineno)
        literals.append((abs(value) - 1, value > 0))
    if len({v for v, _ in literals}) != 3:
        raise DimacsError('clause repeats a variable or holds a literal and its negation', lineno)
    return literals


def satisfying_assignment(formula: CnfFormula, cap: int = SAT_CAP) -> Optional[Tuple[bool, ...]]:
    """
    First satisfying assignment in lexicographic order (False before True),
    or None.
    """
    if formula.num_vars > cap:
        raise CapExceeded('sat_brute_force', formula.num_vars, cap)
    for assignment in product((False, True), repeat=formula.num_vars):
        if formula.satisfied_by(assignment):
            return assignment
    return None


def sat_brute_force(formula: CnfFormula, cap: int = SAT_CAP) -> bool:
    return satisfying_assignment(formula, cap) is not None


class ReductionArtifact(object):
    """
    # ReductionArtifact
    The built graph with its role map. Gadget i occupies 7i..7i+6 in the
    order u, t, ubar, a, s, b, d; clause vertices follow, then o, p, q, r.
    Role indices are 1-based as in the construction.
    """

    def __init__(self, formula: CnfFormula, graph: Graph):
        self.formula = formula
        self.graph = graph
        self.n_vars = formula.num_vars
        self.m_clauses = formula.num_clauses

    @property
    def roles(self) -> Dict[int, Tuple[Text, Optional[int]]]:
        return {v: self.role_of(v) for v in range(self.graph.n)}

    def role_of(self, vertex: int) -> Tuple[Text, Optional[int]]:
        gadgets = 7 * self.n_vars
        if vertex < gadgets:
            return GADGET_ROLES[vertex % 7], vertex // 7 + 1
        if vertex < gadgets + self.m_clauses:
            return 'c', vertex - gadgets + 1
        return CLOSING_ROLES[vertex - gadgets - self.m_clauses], None

    def vertex_of(self, role: Text, index: int = None) -> int:
        if role in GADGET_ROLES:
            return 7 * (index - 1) + GADGET_ROLES.index(role)
        if role == 'c':
            return 7 * self.n_vars + index - 1
        return 7 * self.n_vars + self.m_clauses + CLOSING_ROLES.index(role)

    def literal_vertex(self, literal: Literal) -> int:
        var, polarity = literal
        return self.vertex_of('u' if polarity else 'ubar', var + 1)

    def gadget(self, index: int) -> Graph:
        """
        The induced gadget of variable `index` (1-based), renumbered in role
        order.
        """
        start = self.vertex_of('u', index)
        sub, _ = self.graph.induced_subgraph(((1 << 7) - 1) << start)
        return sub

    def edge_by_roles(self, first: Tuple[Text, Optional[int]], second: Tuple[Text, Optional[int]]) -> Edge:
        edge = canonical_edge(self.vertex_of(*first), self.vertex_of(*second))
        if not self.graph.has_edge(*edge):
            raise NotAnEdge(*edge)
        return edge

    def to_graph6(self) -> Text:
        return emit_graph6(self.graph)

    @property
    def order_formula(self) -> int:
        return 7 * self.n_vars + self.m_clauses + 4

    @property
    def size_formula(self) -> int:
        return 10 * self.n_vars + 4 * self.m_clauses + 5


def build(formula: CnfFormula) -> ReductionArtifact:
    n = formula.num_vars
    m = formula.num_clauses
    order = 7 * n + m + 4
    edges = []
    for i in range(n):
        base = 7 * i
        for x, y in GADGET_EDGES:
            edges.append((base + GADGET_ROLES.index(x), base + GADGET_ROLES.index(y)))
    closing = {role: 7 * n + m + k for k, role in enumerate(CLOSING_ROLES)}
    edges.extend((closing[x], closing[y]) for x, y in CLOSING_EDGES)
    for j, clause in enumerate(formula.clauses):
        c = 7 * n + j
        for var, polarity in clause:
            edges.append((c, 7 * var + (0 if polarity else 2)))
        edges.append((c, closing['r']))
    graph = Graph.from_edge_list(order, edges, cap=WIDE_VERTEX_CAP)
    say('built reduction graph', n_vars=n, m_clauses=m, order=graph.n, size=graph.m)
    return ReductionArtifact(formula, graph)


# ---- explicit labelings -----------------------------------------------------


def _labeling(artifact: ReductionArtifact, twos: List[int], ones: List[int] = ()) -> VertexLabeling:
    values = [0] * artifact.graph.n
    for v in ones:
        values[v] = 1
    for v in twos:
        values[v] = 2
    return VertexLabeling(values)


def _side(artifact: ReductionArtifact, index: int, positive: bool) -> List[int]:
    if positive:
        return [artifact.vertex_of('u', index), artifact.vertex_of('b', index)]
    return [artifact.vertex_of('ubar', index), artifact.vertex_of('a', index)]


def satisfying_trdf(artifact: ReductionArtifact, assignment: Sequence[bool]) -> VertexLabeling:
    """
    The weight-(4n+3) labeling of a truth assignment: u_i, b_i get 2 for
    true variables, ubar_i, a_i for false ones, p gets 2 and r gets 1.
    """
    twos = [artifact.vertex_of('p')]
    for i, value in enumerate(assignment, start=1):
        twos.extend(_side(artifact, i, value))
    return _labeling(artifact, twos, [artifact.vertex_of('r')])


def edge_removal_witness(artifact: ReductionArtifact, edge: Edge) -> VertexLabeling:
    """
    A TRDF of G - e of weight 4n + 4, following the case analysis on where
    the edge e lies.
    """
    u, v = canonical_edge(*edge)
    if not artifact.graph.has_edge(u, v):
        raise NotAnEdge(u, v)
    n = artifact.n_vars
    (role_u, index_u), (role_v, index_v) = artifact.role_of(u), artifact.role_of(v)
    closing = artifact.vertex_of

    if role_u in GADGET_ROLES and role_v in GADGET_ROLES:
        i = index_u
        pair = {role_u, role_v}
        if pair in ({'a', 'd'}, {'a', 's'}, {'a', 'ubar'}, {'t', 'ubar'}):
            local = _side(artifact, i, True)
        elif pair in ({'b', 'd'}, {'b', 's'}, {'b', 'u'}, {'t', 'u'}):
            local = _side(artifact, i, False)
        elif pair == {'a', 'u'}:
            local = [closing('ubar', i), closing('b', i)]
        else:
            local = [closing('u', i), closing('a', i)]
        twos = [closing('r'), closing('p')] + local
        for ell in range(1, n + 1):
            if ell != i:
                twos.extend(_side(artifact, ell, True))
        return _labeling(artifact, twos)

    if role_u in CLOSING_ROLES and role_v in CLOSING_ROLES:
        twos = [closing('r')]
        twos.append(closing('q') if {role_u, role_v} in ({'r', 'p'}, {'o', 'p'}) else closing('p'))
        for ell in range(1, n + 1):
            twos.extend(_side(artifact, ell, True))
        return _labeling(artifact, twos)

    # an edge at a clause vertex: r c_j or a clause-literal edge
    twos = [closing('r'), closing('p')]
    sides = {ell: True for ell in range(1, n + 1)}
    if 'r' in (role_u, role_v):
        j = index_u if role_u == 'c' else index_v
        var, polarity = artifact.formula.clauses[j - 1][0]
        sides[var + 1] = polarity
    for ell, positive in sides.items():
        twos.extend(_side(artifact, ell, positive))
    return _labeling(artifact, twos)


# ---- claims -----------------------------------------------------------------


class ClaimReport(object):
    """
    Outcome of checking the three claims on one formula. A claim left as
    None was not checked because the graph exceeds the solver cap.
    """

    def __init__(self, artifact: ReductionArtifact):
        self.artifact = artifact
        self.sat = None
        self.gamma_tR = None
        self.gamma_tR_without_pq = None
        self.b_tR = None
        self.sat_iff_minimum = None
        self.edge_removal_bounded = None
        self.bondage_one_iff_minimum = None
        self.pq_shortcut = None
        self.edge_removal_failures = []
        self.gamma_in_range = None

    @property
    def checked(self) -> bool:
        return self.sat_iff_minimum is not None

    @property
    def ok(self) -> bool:
        return all(
            value is not False for value in (
                self.sat_iff_minimum, self.edge_removal_bounded, self.bondage_one_iff_minimum, self.gamma_in_range,
            )
        )

    @property
    def counterexample(self) -> Optional[Text]:
        return None if self.ok else self.artifact.to_graph6()

    def to_dict(self) -> Dict:
        n = self.artifact.n_vars
        return {
            'n_vars': n,
            'm_clauses': self.artifact.m_clauses,
            'order': self.artifact.graph.n,
            'size': self.artifact.graph.m,
            'sat': self.sat,
            'gamma_tR': self.gamma_tR,
            'gamma_tR_without_pq': self.gamma_tR_without_pq,
            'b_tR': None if self.b_tR is None else self.b_tR.to_dict(),
            'claim1': self.sat_iff_minimum,
            'claim2': self.edge_removal_bounded,
            'claim3': self.bondage_one_iff_minimum,
            'sat_iff_minimum': self.sat_iff_minimum,
            'edge_removal_bounded': self.edge_removal_bounded,
            'bondage_one_iff_minimum': self.bondage_one_iff_minimum,
            'pq_shortcut': self.pq_shortcut,
            'edge_removal_failures': [list(e) for e in self.edge_removal_failures],
            'gamma_in_range': self.gamma_in_range,
            'counterexample': self.counterexample,
        }


def verify_claims(
    formula: CnfFormula,
    solver_cap: int = REDUCTION_SOLVER_CAP,
) -> ClaimReport:
    from .bondage import b_tR

    artifact = build(formula)
    report = ClaimReport(artifact)
    graph = artifact.graph
    n = formula.num_vars
    assignment = satisfying_assignment(formula)
    report.sat = assignment is not None
    if graph.n > solver_cap:
        say('reduction graph beyond solver cap, claims unchecked', order=graph.n, cap=solver_cap)
        return report

    report.gamma_tR = gamma_tR_value(graph)
    report.gamma_in_range = report.gamma_tR in (4 * n + 3, 4 * n + 4)
    if assignment is not None and not is_trdf(graph, satisfying_trdf(artifact, assignment)):
        report.gamma_in_range = False
    report.sat_iff_minimum = (report.gamma_tR == 4 * n + 3) == report.sat

    for edge in graph.edges():
        reduced = graph.remove_edges([edge])
        if is_trdf(reduced, edge_removal_witness(artifact, edge)):
            continue
        if invariant_exceeds(reduced, 'gamma_tR', 4 * n + 4):
            report.edge_removal_failures.append(edge)
    report.edge_removal_bounded = not report.edge_removal_failures

    pq = artifact.edge_by_roles(('p', None), ('q', None))
    report.gamma_tR_without_pq = gamma_tR_value(graph.remove_edges([pq]), upper_bound=4 * n + 5)
    report.b_tR = b_tR(graph, max_size=1)
    bondage_one = report.b_tR.is_finite and report.b_tR.value == 1
    report.bondage_one_iff_minimum = (report.gamma_tR == 4 * n + 3) == bondage_one
    report.pq_shortcut = (report.gamma_tR_without_pq > report.gamma_tR) == report.sat

    if not report.ok:
        shout('reduction claim violated', graph6=report.counterexample, formula=formula.to_dimacs())
    return report
