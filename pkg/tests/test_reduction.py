from itertools import product

import pytest

from troman.exceptions import CapExceeded, DimacsError, FormulaError, NotAnEdge
from troman.families import match_cycle
from troman.labeling import is_trdf
from troman.reduction import (
    CnfFormula,
    build,
    edge_removal_witness,
    parse_dimacs,
    sat_brute_force,
    satisfying_assignment,
    satisfying_trdf,
    verify_claims,
)


def single_clause():
    # x1 or not x2 or x3
    return CnfFormula(3, [((0, True), (1, False), (2, True))])


def one_clause(signs):
    return CnfFormula(3, [tuple(enumerate(signs))])


SIGN_PATTERNS = list(product((True, False), repeat=3))

# u1 or u2 or not u3; u2 or not u3 or not u4
RUNNING_EXAMPLE = 'p cnf 4 2\n1 2 -3 0\n2 -3 -4 0\n'


def all_sign_patterns():
    return CnfFormula(3, [
        tuple(enumerate(signs)) for signs in SIGN_PATTERNS
    ])


class TestCnfFormula(object):
    @pytest.mark.parametrize('num_vars, clauses', [
        (2, [((0, True), (1, True), (2, True))]),
        (3, [((0, True), (0, False), (1, True))]),
        (3, [((0, True), (1, True))]),
        (-1, []),
    ])
    def test_invalid(self, num_vars, clauses):
        with pytest.raises(FormulaError):
            CnfFormula(num_vars, clauses)

    def test_satisfiability(self):
        assert satisfying_assignment(single_clause()) == (False, False, False)
        assert sat_brute_force(single_clause())
        assert not sat_brute_force(all_sign_patterns())
        assert satisfying_assignment(CnfFormula(0, [])) == ()

    def test_sat_cap(self):
        with pytest.raises(CapExceeded):
            satisfying_assignment(CnfFormula(25, []))


class TestDimacs(object):
    def test_parse_and_emit(self):
        text = 'c two clauses\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n'
        formula = parse_dimacs(text)
        assert formula.num_vars == 3
        assert formula.clauses == (
            ((0, True), (1, False), (2, True)),
            ((0, False), (1, True), (2, False)),
        )
        assert formula.to_dimacs() == 'p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n'
        assert parse_dimacs(formula.to_dimacs()) == formula

    def test_clauses_may_span_lines(self):
        assert parse_dimacs('p cnf 3 1\n1 -2\n3 0\n') == parse_dimacs('p cnf 3 1\n1 -2 3 0\n')

    def test_percent_terminator_and_open_trailing_clause(self):
        assert parse_dimacs('p cnf 3 1\n1 2 3 0\n%\n0\n').num_clauses == 1
        assert parse_dimacs('p cnf 3 1\n1 2 3').num_clauses == 1

    @pytest.mark.parametrize('text, line', [
        ('1 2 3 0\n', 1),
        ('p cnf 3 1\n1 2 0\n', 2),
        ('p cnf 2 1\n1 2 3 0\n', 2),
        ('p cnf 3 1\n1 -1 2 0\n', 2),
        ('p cnf 3 1\n1 x 2 0\n', 2),
        ('p cnf 3 1\np cnf 3 1\n', 2),
        ('p dnf 3 1\n', 1),
        ('p cnf 3 2\n1 2 3 0\n', None),
        ('', None),
    ])
    def test_malformed(self, text, line):
        with pytest.raises(DimacsError) as info:
            parse_dimacs(text)
        assert info.value.line == line


class TestBuild(object):
    def test_order_size_and_numbering(self):
        artifact = build(single_clause())
        graph = artifact.graph
        assert (graph.n, graph.m) == (26, 39)
        assert (artifact.order_formula, artifact.size_formula) == (26, 39)
        assert artifact.role_of(0) == ('u', 1)
        assert artifact.role_of(9) == ('ubar', 2)
        assert artifact.role_of(21) == ('c', 1)
        assert [artifact.vertex_of(r) for r in ('o', 'p', 'q', 'r')] == [22, 23, 24, 25]
        assert artifact.roles[25] == ('r', None)

    def test_clause_vertex_neighbors(self):
        artifact = build(single_clause())
        c = artifact.vertex_of('c', 1)
        assert sorted(
            v for v in range(artifact.graph.n) if artifact.graph.has_edge(c, v)
        ) == [0, 9, 14, 25]
        assert artifact.literal_vertex((1, False)) == 9

    def test_gadgets_are_identical(self):
        artifact = build(single_clause())
        gadgets = [artifact.gadget(i) for i in (1, 2, 3)]
        assert gadgets[0].m == 10
        assert gadgets[0] == gadgets[1] == gadgets[2]

    def test_closing_graph(self):
        artifact = build(single_clause())
        assert artifact.edge_by_roles(('p', None), ('q', None)) == (23, 24)
        with pytest.raises(NotAnEdge):
            artifact.edge_by_roles(('o', None), ('r', None))
        closing, _ = artifact.graph.induced_subgraph(0b1111 << 22)
        assert closing.m == 5

    def test_removing_pq_leaves_a_four_cycle(self):
        artifact = build(single_clause())
        o, p, q, r = (artifact.vertex_of(role) for role in ('o', 'p', 'q', 'r'))
        reduced = artifact.graph.remove_edges([(p, q)])
        assert not reduced.has_edge(p, q)
        assert all(reduced.has_edge(x, y) for x, y in ((o, p), (p, r), (r, q), (q, o)))
        closing, index_map = reduced.induced_subgraph(sum(1 << v for v in (o, p, q, r)))
        assert index_map == [o, p, q, r]
        assert closing.m == 4
        assert match_cycle(closing)

    def test_gadget_swaps_literal_sides(self):
        # u <-> ubar and a <-> b, in role order (u, t, ubar, a, s, b, d)
        swap = [2, 1, 0, 5, 4, 3, 6]
        gadget = build(single_clause()).gadget(1)
        mapped = {tuple(sorted((swap[x], swap[y]))) for x, y in gadget.edges()}
        assert mapped == set(gadget.edges())

    @pytest.mark.parametrize('signs', SIGN_PATTERNS)
    def test_every_sign_pattern(self, signs):
        artifact = build(one_clause(signs))
        graph = artifact.graph
        assert (graph.n, graph.m) == (26, 39)
        c = artifact.vertex_of('c', 1)
        literals = sorted(artifact.literal_vertex((v, sign)) for v, sign in enumerate(signs))
        assert [v for v in range(graph.n) if graph.has_edge(c, v)] == literals + [artifact.vertex_of('r')]
        f = satisfying_trdf(artifact, satisfying_assignment(artifact.formula))
        assert f.weight == 15
        assert is_trdf(graph, f)
        for edge in graph.edges():
            witness = edge_removal_witness(artifact, edge)
            assert witness.weight == 16
            assert is_trdf(graph.remove_edges([edge]), witness), edge

    def test_running_example(self):
        artifact = build(parse_dimacs(RUNNING_EXAMPLE))
        assert (artifact.graph.n, artifact.graph.m) == (34, 53)
        assert (artifact.order_formula, artifact.size_formula) == (34, 53)


class TestExplicitLabelings(object):
    def test_satisfying_trdf(self):
        artifact = build(single_clause())
        f = satisfying_trdf(artifact, satisfying_assignment(artifact.formula))
        assert f.weight == 15
        assert is_trdf(artifact.graph, f)

    def test_edge_removal_witness_on_every_edge(self):
        artifact = build(single_clause())
        graph = artifact.graph
        for edge in graph.edges():
            f = edge_removal_witness(artifact, edge)
            assert f.weight == 16
            assert is_trdf(graph.remove_edges([edge]), f), edge

    def test_edge_removal_witness_needs_an_edge(self):
        artifact = build(single_clause())
        with pytest.raises(NotAnEdge):
            edge_removal_witness(artifact, (22, 25))


class TestVerifyClaims(object):
    def test_formula_without_clauses(self):
        report = verify_claims(CnfFormula(1, []))
        assert report.checked
        assert report.sat
        assert report.gamma_tR == 7
        assert report.ok
        assert report.counterexample is None
        assert report.to_dict()['order'] == 11

    def test_beyond_solver_cap(self):
        report = verify_claims(CnfFormula(1, []), solver_cap=10)
        assert not report.checked
        assert report.ok
        assert report.to_dict()['claim1'] is None

    def test_satisfiable_formula(self):
        report = verify_claims(single_clause())
        assert report.gamma_tR == 15
        assert report.ok and report.pq_shortcut
        assert report.b_tR == 1

    @pytest.mark.parametrize('signs', SIGN_PATTERNS)
    def test_single_clause_claims(self, signs):
        data = verify_claims(one_clause(signs)).to_dict()
        assert data['sat'] is True
        assert data['gamma_tR'] == 15
        assert (data['claim1'], data['claim2'], data['claim3']) == (True, True, True)
        assert data['b_tR']['value'] == 1
        assert data['counterexample'] is None

    @pytest.mark.slow
    def test_running_example(self):
        report = verify_claims(parse_dimacs(RUNNING_EXAMPLE))
        assert report.sat
        assert report.gamma_tR == 19
        assert report.sat_iff_minimum and report.bondage_one_iff_minimum
        assert report.ok

    @pytest.mark.slow
    def test_unsatisfiable_formula(self):
        report = verify_claims(all_sign_patterns())
        assert report.to_dict()['order'] == 33
        assert not report.sat
        assert report.gamma_tR == 16
        assert report.ok
