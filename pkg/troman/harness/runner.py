"""
# Suite runner
Evaluates a selection of catalog theorems over a corpus. Graphs are
processed in a process pool when more than one worker is configured;
results are merged in corpus order, so reports do not depend on the worker
count.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import (
    Dict,
    List,
    Optional,
    Text,
    Tuple,
)

from appyratus.files import Json
from appyratus.schema import Schema, fields

from troman.constants import (
    DEFAULT_EXHAUSTIVE_ORDER,
    DEFAULT_SEED,
    RE_THEOREM_ID,
    SLOW_EXHAUSTIVE_ORDER,
)
from troman.exceptions import CapExceeded, InconsistencyError, UsageError
from troman.graph import Graph
from troman.io import emit_graph6
from troman.utils import read_config_file, resolve_thread_count, say, shout

from .corpus import CorpusSpec
from .theorems import CATALOG, VACUOUS, theorem_ids

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'

# graphs handed to one worker at a time
CHUNK_SIZE = 64


class SuiteConfigSchema(Schema):
    corpus = fields.String(nullable=True)
    theorems = fields.List(fields.String(), nullable=True)
    seed = fields.Int(nullable=True)
    threads = fields.Int(nullable=True)
    slow = fields.Bool(nullable=True)
    caps = fields.Dict(nullable=True)


class TheoremResult(object):
    """
    # TheoremResult
    Per-theorem tallies over a corpus. The first failing graph is kept as a
    graph6 counterexample.
    """

    def __init__(self, tid: Text):
        self.tid = tid
        self.checked = 0
        self.vacuous = 0
        self.skipped = 0
        self.failed = 0
        self.counterexample = None
        self.detail = None

    @property
    def statement(self) -> Text:
        return CATALOG[self.tid].statement

    @property
    def status(self) -> Text:
        if self.failed:
            return FAIL
        if self.checked:
            return PASS
        return VACUOUS

    def record(self, outcome: Text, graph6: Text = None, detail: Text = None) -> None:
        if outcome == PASS:
            self.checked += 1
        elif outcome == VACUOUS:
            self.vacuous += 1
        elif outcome == SKIPPED:
            self.skipped += 1
        else:
            self.checked += 1
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = graph6
                self.detail = detail

    def to_dict(self) -> Dict:
        data = {
            'id': self.tid,
            'statement': self.statement,
            'status': self.status,
            'checked': self.checked,
            'vacuous': self.vacuous,
            'skipped': self.skipped,
            'failed': self.failed,
        }
        if self.failed:
            data['counterexample'] = self.counterexample
            data['detail'] = self.detail
        return data


class SuiteReport(object):
    def __init__(
        self,
        corpus: CorpusSpec,
        results: List[TheoremResult],
        corpus_size: int,
        seed: int,
        caps: Dict[Text, Dict],
    ):
        self.corpus = corpus
        self.results = results
        self.corpus_size = corpus_size
        self.seed = seed
        self.caps = caps

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    def to_dict(self) -> Dict:
        return {
            'corpus': self.corpus.to_dict(),
            'corpus_spec': str(self.corpus),
            'corpus_size': self.corpus_size,
            'seed': self.seed,
            'caps': self.caps,
            'theorems': [r.to_dict() for r in self.results],
            'ok': self.ok,
        }

    def to_json(self) -> Text:
        return Json.dump(self.to_dict(), indent=2, sort_keys=True)

    def rows(self) -> List[Tuple]:
        return [
            (r.tid, r.status, r.checked, r.vacuous, r.skipped, r.failed)
            for r in self.results
        ]


def select_theorems(selection=None) -> List[Text]:
    """
    Resolve 'all', a comma-separated string or a list of ids into catalog
    ids in catalog order.
    """
    if selection is None or selection == 'all' or selection == ['all']:
        return theorem_ids()
    if isinstance(selection, str):
        selection = [s for s in selection.split(',')]
    chosen = set()
    for raw in selection:
        tid = raw.strip().upper()
        if not RE_THEOREM_ID.match(tid) or tid not in CATALOG:
            raise UsageError('unknown theorem id {!r}'.format(raw))
        chosen.add(tid)
    return [tid for tid in theorem_ids() if tid in chosen]


def resolve_caps(tids: List[Text], overrides: Optional[Dict] = None) -> Dict[Text, Dict]:
    overrides = overrides or {}
    caps = {}
    for tid in tids:
        caps[tid] = CATALOG[tid].caps()
        extra = overrides.get(tid) or {}
        unknown = set(extra) - {'max_n', 'max_m'}
        if unknown:
            raise UsageError('unknown cap keys for {}: {}'.format(tid, ', '.join(sorted(unknown))))
        caps[tid].update({k: int(v) for k, v in extra.items()})
    return caps


def evaluate_graph(job: Tuple[Graph, List[Text], Dict[Text, Dict]]) -> List[Tuple[Text, Optional[Text]]]:
    """
    Outcome and failure detail of each selected theorem on one graph.
    """
    graph, tids, caps = job
    outcomes = []
    for tid in tids:
        cap = caps[tid]
        if graph.n > cap['max_n'] or (cap['max_m'] is not None and graph.m > cap['max_m']):
            outcomes.append((SKIPPED, None))
            continue
        try:
            verdict = CATALOG[tid].check(graph)
        except CapExceeded as exc:
            say('graph skipped', theorem=tid, reason=str(exc))
            outcomes.append((SKIPPED, None))
            continue
        except InconsistencyError as exc:
            outcomes.append((FAIL, str(exc)))
            continue
        if verdict is None:
            outcomes.append((PASS, None))
        elif verdict == VACUOUS:
            outcomes.append((VACUOUS, None))
        else:
            outcomes.append((FAIL, verdict))
    return outcomes


def run_suite(
    corpus: CorpusSpec,
    theorems=None,
    threads: int = None,
    caps: Dict = None,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    tids = select_theorems(theorems)
    resolved_caps = resolve_caps(tids, caps)
    graphs = corpus.collect()
    jobs = [(graph, tids, resolved_caps) for graph in graphs]
    workers = resolve_thread_count(threads)
    say('running suite', corpus=str(corpus), theorems=tids, graphs=len(graphs), workers=workers)

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            per_graph = list(executor.map(evaluate_graph, jobs, chunksize=CHUNK_SIZE))
    else:
        per_graph = [evaluate_graph(job) for job in jobs]

    results = [TheoremResult(tid) for tid in tids]
    for graph, outcomes in zip(graphs, per_graph):
        for result, (outcome, detail) in zip(results, outcomes):
            graph6 = emit_graph6(graph) if outcome == FAIL else None
            result.record(outcome, graph6, detail)

    for result in results:
        say('theorem result', **result.to_dict())
        if result.status == FAIL:
            shout('theorem violated', theorem=result.tid, graph6=result.counterexample, detail=result.detail)
    return SuiteReport(corpus, results, len(graphs), seed, resolved_caps)


def load_suite_config(path: Text = None, **flags) -> Dict:
    """
    Merge defaults, the optional config file and explicit flags, in that
    order of precedence. Flags left as None do not override.
    """
    data = read_config_file(path) if path else {}
    if isinstance(data.get('theorems'), str):
        data['theorems'] = [t for t in data['theorems'].split(',')]
    result, errors = SuiteConfigSchema().process(data)
    if errors:
        shout('invalid suite config', errors=errors)
        raise UsageError('invalid suite config: {}'.format(errors))
    config = {
        'corpus': None,
        'theorems': 'all',
        'seed': DEFAULT_SEED,
        'threads': None,
        'slow': False,
        'caps': {},
    }
    config.update({k: v for k, v in (result or {}).items() if v is not None})
    config.update({k: v for k, v in flags.items() if v is not None})
    if not config['corpus']:
        order = SLOW_EXHAUSTIVE_ORDER if config['slow'] else DEFAULT_EXHAUSTIVE_ORDER
        config['corpus'] = 'all:{}'.format(order)
    return config


def run_configured_suite(config: Dict) -> SuiteReport:
    corpus = CorpusSpec.parse(config['corpus'], seed=config['seed'])
    return run_suite(
        corpus,
        theorems=config['theorems'],
        threads=config['threads'],
        caps=config['caps'],
        seed=config['seed'],
    )
