import json

import pytest

from troman.bondage import b, b_tR, exhaustive_bondage
from troman.constants import ALL_FUNCTIONS_CAP, DEFAULT_SEED, EXHAUSTIVE_BONDAGE_MAX_EDGES
from troman.exceptions import TromanError, UsageError
from troman.families import FamilySpec
from troman.graph import Graph
from troman.harness import (
    CATALOG,
    AllConnected,
    CorpusSpec,
    FamiliesCorpus,
    FileCorpus,
    RandomCorpus,
    Theorem,
    load_suite_config,
    run_configured_suite,
    run_suite,
    select_theorems,
    theorem_ids,
)
from troman.harness.theorems import HOLDS
from troman.invariants import all_gamma_tR_functions, gamma_tR_value
from troman.io import parse_graph6


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.delenv('TROMAN_THREADS', raising=False)


class TestCorpusSpec(object):
    @pytest.mark.parametrize('max_n, size', [(2, 1), (3, 5), (4, 43)])
    def test_all_connected_sizes(self, max_n, size):
        assert len(AllConnected(max_n).collect()) == size

    def test_all_connected_order(self):
        graphs = AllConnected(3).collect()
        assert graphs[0] == parse_graph6('A_')
        assert [g.n for g in graphs] == [2, 3, 3, 3, 3]

    def test_parse(self):
        assert isinstance(CorpusSpec.parse('all:4'), AllConnected)
        corpus = CorpusSpec.parse('random:5,6,0.5')
        assert isinstance(corpus, RandomCorpus)
        assert corpus.seed == DEFAULT_SEED
        assert CorpusSpec.parse('random:5,6,0.5', seed=3).seed == 3
        assert CorpusSpec.parse('random:5,6,0.5,9', seed=3).seed == 9
        assert isinstance(CorpusSpec.parse('families:path:4;star:3'), FamiliesCorpus)
        assert isinstance(CorpusSpec.parse('file:/tmp/graphs.g6'), FileCorpus)

    @pytest.mark.parametrize('text', [
        'bogus:1',
        'all:1',
        'all:x',
        'random:1,2',
        'random:1,5,0',
        'families:nope:3',
    ])
    def test_malformed(self, text):
        with pytest.raises(TromanError):
            CorpusSpec.parse(text)

    def test_random_corpus_is_reproducible(self):
        first = RandomCorpus(5, 6, 0.5, seed=7).collect()
        second = RandomCorpus(5, 6, 0.5, seed=7).collect()
        assert first == second
        assert len(first) == 5
        assert not any(g.has_isolated_vertex() for g in first)
        assert str(RandomCorpus(5, 6, 0.5, seed=7)) == 'random:5,6,0.5,7'

    def test_families_corpus(self):
        corpus = CorpusSpec.parse('families:path:4;star:3')
        assert str(corpus) == 'families:path:4;star:3'
        assert [g.n for g in corpus.collect()] == [4, 4]

    def test_file_corpus(self, tmp_path):
        path = tmp_path / 'graphs.g6'
        path.write_text('# header\nA_\n\nB?\nC~\n')
        graphs = FileCorpus(str(path)).collect()
        assert graphs == [parse_graph6('A_'), parse_graph6('C~')]

    def test_file_corpus_errors(self, tmp_path):
        with pytest.raises(UsageError):
            FileCorpus(str(tmp_path / 'missing.g6')).collect()
        path = tmp_path / 'bad.g6'
        path.write_text('A_\nC\n')
        with pytest.raises(UsageError) as info:
            FileCorpus(str(path)).collect()
        assert ':2:' in str(info.value)


class TestCatalog(object):
    def test_ids(self):
        assert theorem_ids() == ['T{}'.format(i) for i in range(1, 27)]
        assert all(CATALOG[tid].statement for tid in theorem_ids())

    def test_select_theorems(self):
        assert select_theorems('T2,t1') == ['T1', 'T2']
        assert select_theorems(['T10', 'T3']) == ['T3', 'T10']
        assert select_theorems('all') == theorem_ids()
        assert select_theorems(None) == theorem_ids()
        for bad in ('T0', 'T27', 'X1'):
            with pytest.raises(UsageError):
                select_theorems(bad)


class TestRunSuite(object):
    def test_basic_theorems_hold_on_small_graphs(self):
        report = run_suite(AllConnected(4), theorems='T1,T2,T3,T6', threads=1)
        assert report.ok
        assert report.corpus_size == 43
        assert [r.tid for r in report.results] == ['T1', 'T2', 'T3', 'T6']
        assert report.results[0].checked == 43

    def test_cap_override_skips_larger_graphs(self):
        report = run_suite(AllConnected(4), theorems='T1', threads=1, caps={'T1': {'max_n': 3}})
        result = report.results[0]
        assert (result.checked, result.skipped) == (5, 38)
        assert report.caps['T1']['max_n'] == 3

    def test_unknown_cap_key(self):
        with pytest.raises(UsageError):
            run_suite(AllConnected(3), theorems='T1', threads=1, caps={'T1': {'depth': 2}})

    def test_report_json(self):
        report = run_suite(AllConnected(3), theorems='T1,T5', seed=11, threads=1)
        data = json.loads(report.to_json())
        assert data['corpus'] == {'mode': 'all', 'max_n': 3}
        assert data['corpus_spec'] == 'all:3'
        assert data['seed'] == 11
        assert data['ok'] is True
        assert [t['id'] for t in data['theorems']] == ['T1', 'T5']
        assert report.rows()[0][:2] == ('T1', 'pass')

    def test_worker_count_does_not_change_report(self):
        serial = run_suite(AllConnected(4), theorems='T1,T6', threads=1)
        pooled = run_suite(AllConnected(4), theorems='T1,T6', threads=2)
        assert serial.to_json() == pooled.to_json()

    def test_failing_theorem_reports_first_counterexample(self, monkeypatch):
        monkeypatch.setitem(
            CATALOG, 'T99', Theorem('T99', 'never holds', lambda graph: 'refuted', max_n=12))
        report = run_suite(AllConnected(3), theorems=['T99'], threads=1)
        assert not report.ok
        result = report.to_dict()['theorems'][0]
        assert result['status'] == 'fail'
        assert result['failed'] == 5
        assert result['counterexample'] == 'A_'
        assert result['detail'] == 'refuted'

    def test_vacuous_theorem(self):
        # stars have infinite b_tR, so the full-degree bondage statement never applies
        report = run_suite(CorpusSpec.parse('families:star:3;star:4'), theorems='T7', threads=1)
        result = report.results[0]
        assert result.status == 'vacuous'
        assert result.vacuous == 2
        assert report.ok


def family(text):
    return FamilySpec.parse(text).generate().graph


class TestTargetedTheorems(object):
    def test_bondage_comparisons_with_infinite_btR(self):
        report = run_suite(CorpusSpec.parse('families:cycle:4;path:4;star:3'), theorems='T12', threads=1)
        result = report.results[0]
        assert (result.checked, result.vacuous) == (3, 0)
        assert report.ok

    def test_plain_bondage_below_infinite_btR(self):
        # 2 gamma = gamma_tR on C_4, yet b < b_tR
        graph = family('cycle:4')
        assert b_tR(graph).is_infinite
        assert b(graph) == 3
        assert CATALOG['T12'].check(graph) is HOLDS

    def test_vertex_cover_bound_on_stars(self):
        report = run_suite(CorpusSpec.parse('families:star:3;star:5'), theorems='T16', threads=1)
        result = report.results[0]
        assert result.status == 'pass'
        assert result.checked == 2

    def test_unique_function(self):
        # two triangles joined by the edge 0-3
        graph = Graph.from_edge_list(6, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (3, 5), (4, 5)])
        functions = all_gamma_tR_functions(graph, ALL_FUNCTIONS_CAP)
        assert len(functions) == 1
        assert functions[0].weight == 4
        assert functions[0].v2 == 0b1001
        assert b_tR(graph) == 1
        assert CATALOG['T21'].check(graph) is HOLDS

    def test_four_clique(self):
        # K_4 on 0..3 with the path 0-4-5
        k4 = [(u, v) for u in range(4) for v in range(u + 1, 4)]
        graph = Graph.from_edge_list(6, k4 + [(0, 4), (4, 5)])
        assert gamma_tR_value(graph) == 4
        assert b_tR(graph) == 1
        assert CATALOG['T22'].check(graph) is HOLDS

    def test_girth_cycle(self):
        # C_5 on 0..4 with the path 0-5-6
        cycle = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
        graph = Graph.from_edge_list(7, cycle + [(0, 5), (5, 6)])
        assert graph.girth() == 5
        assert gamma_tR_value(graph) == 6
        assert b_tR(graph) == 1
        assert CATALOG['T25'].check(graph) is HOLDS

    def test_oracle_on_every_graph_of_order_five(self):
        report = run_suite(AllConnected(5), theorems='T1', threads=1)
        assert report.ok
        assert report.results[0].checked == report.corpus_size


@pytest.mark.slow
class TestLargeCorpora(object):
    @pytest.mark.parametrize('n', [7, 8, 9, 10])
    def test_oracle_on_random_graphs(self, n):
        report = run_suite(RandomCorpus(50, n, 0.4, seed=DEFAULT_SEED), theorems='T1', threads=1)
        assert report.ok
        assert report.results[0].checked == 50

    def test_oracle_on_every_graph_of_order_six(self):
        report = run_suite(AllConnected(6), theorems='T1')
        assert report.ok
        assert report.results[0].checked == report.corpus_size

    def test_bondage_against_exhaustive_search(self):
        for graph in AllConnected(6).collect():
            if graph.m > EXHAUSTIVE_BONDAGE_MAX_EDGES:
                continue
            assert b_tR(graph).as_number() == exhaustive_bondage(graph).as_number(), graph

    def test_characterizations_on_connected_graphs(self):
        report = run_suite(AllConnected(5), theorems='T3,T6,T8,T10,T11,T20')
        assert report.ok

    def test_full_catalog_on_order_six(self):
        report = run_suite(AllConnected(6))
        assert report.ok


class TestSuiteConfig(object):
    def test_defaults(self):
        config = load_suite_config()
        assert config['corpus'] == 'all:6'
        assert config['theorems'] == 'all'
        assert config['seed'] == DEFAULT_SEED
        assert load_suite_config(slow=True)['corpus'] == 'all:7'

    def test_file_then_flags(self, tmp_path):
        path = tmp_path / 'suite.yml'
        path.write_text('corpus: all:3\ntheorems: T1,T2\nseed: 7\n')
        config = load_suite_config(str(path), seed=9, corpus=None)
        assert config['corpus'] == 'all:3'
        assert config['theorems'] == ['T1', 'T2']
        assert config['seed'] == 9

    def test_json_config(self, tmp_path):
        path = tmp_path / 'suite.json'
        path.write_text(json.dumps({'corpus': 'all:3', 'theorems': ['T1']}))
        report = run_configured_suite(load_suite_config(str(path), threads=1))
        assert report.ok
        assert report.corpus_size == 5

    def test_missing_config_file(self, tmp_path):
        with pytest.raises(UsageError):
            load_suite_config(str(tmp_path / 'nope.yml'))
