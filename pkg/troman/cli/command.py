"""
# Commands
The work behind each CLI action. Every command returns (exit code, text to
print) so it can be driven without a terminal.
"""

from functools import wraps
from typing import Text, Tuple

from appyratus.files import Json
from tabulate import tabulate

from troman.constants import BONDAGE_KINDS, GRAPH_FORMATS
from troman.bondage import bondage as solve_bondage
from troman.exceptions import InconsistencyError, TromanError, UsageError
from troman.families import FamilySpec
from troman.harness import load_suite_config, run_configured_suite
from troman.invariants import InvariantReport
from troman.io import emit_edge_list, emit_graph6
from troman.reduction import build, parse_dimacs, verify_claims
from troman.utils import shout

from .util import expand_path, read_text_argument, resolve_graph

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

TABLE_HEADERS = ('theorem', 'status', 'checked', 'vacuous', 'skipped', 'failed')

Outcome = Tuple[int, Text]


def _json(data) -> Text:
    return Json.dump(data, indent=2, sort_keys=True)


def guarded(func):
    """
    Map errors onto exit codes: internal inconsistencies exit 1, every other
    toolkit error is a usage problem and exits 2.
    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> Outcome:
        try:
            return func(*args, **kwargs)
        except InconsistencyError as exc:
            shout(exc)
            return EXIT_FAIL, str(exc)
        except TromanError as exc:
            return EXIT_USAGE, str(exc)
    return wrapper


@guarded
def gen(spec: Text, format: Text = 'graph6') -> Outcome:
    if format not in GRAPH_FORMATS:
        raise UsageError('format must be one of {}'.format(', '.join(GRAPH_FORMATS)))
    graph = FamilySpec.parse(spec).generate().graph
    if format == 'edges':
        return EXIT_OK, emit_edge_list(graph).rstrip('\n')
    return EXIT_OK, emit_graph6(graph)


@guarded
def invariants(graph_arg: Text, stdin=None) -> Outcome:
    graph = resolve_graph(graph_arg, stdin)
    return EXIT_OK, _json(InvariantReport.compute(graph).to_dict())


@guarded
def bondage(graph_arg: Text, which: Text = 'tr', stdin=None) -> Outcome:
    if which not in BONDAGE_KINDS:
        raise UsageError('--which must be one of {}'.format(', '.join(BONDAGE_KINDS)))
    graph = resolve_graph(graph_arg, stdin)
    return EXIT_OK, _json(solve_bondage(graph, which).to_dict())


@guarded
def check(
    corpus: Text = None,
    theorems: Text = None,
    seed: int = None,
    slow: bool = False,
    config: Text = None,
    table: bool = False,
    threads: int = None,
) -> Outcome:
    settings = load_suite_config(
        expand_path(config) if config else None,
        corpus=corpus,
        theorems=theorems,
        seed=seed,
        slow=slow or None,
        threads=threads,
    )
    report = run_configured_suite(settings)
    output = report.to_json()
    if table:
        output += '\n' + tabulate(report.rows(), headers=TABLE_HEADERS)
    return (EXIT_OK if report.ok else EXIT_FAIL), output


@guarded
def reduce(cnf: Text, verify: bool = False, graph6: bool = False, stdin=None) -> Outcome:
    formula = parse_dimacs(read_text_argument(cnf, stdin))
    if verify:
        report = verify_claims(formula)
        lines = [_json(report.to_dict())]
        if graph6:
            lines.append(report.artifact.to_graph6())
        return (EXIT_OK if report.ok else EXIT_FAIL), '\n'.join(lines)
    artifact = build(formula)
    if graph6:
        return EXIT_OK, artifact.to_graph6()
    return EXIT_OK, _json({
        'n_vars': artifact.n_vars,
        'm_clauses': artifact.m_clauses,
        'order': artifact.graph.n,
        'size': artifact.graph.m,
    })
