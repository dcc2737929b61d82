import sys

from typing import Text

from ravel.apps.cli import Cli

from . import command

cli = Cli(name='troman', tagline='total Roman domination and bondage toolkit')


def finish(outcome) -> None:
    code, output = outcome
    if code == command.EXIT_USAGE:
        cli.log.error(output)
    elif output:
        print(output)
    if code:
        sys.exit(code)


@cli.action()
def gen(request, spec: Text, format: Text = 'graph6'):
    finish(command.gen(spec, format=format))


@cli.action()
def invariants(request, graph: Text):
    finish(command.invariants(graph))


@cli.action()
def bondage(request, graph: Text, which: Text = 'tr'):
    finish(command.bondage(graph, which=which))


@cli.action()
def check(
    request,
    corpus: Text = None,
    theorems: Text = None,
    seed: int = None,
    slow: bool = False,
    config: Text = None,
    table: bool = False,
    threads: int = None,
):
    finish(command.check(
        corpus=corpus,
        theorems=theorems,
        seed=seed,
        slow=slow,
        config=config,
        table=table,
        threads=threads,
    ))


@cli.action()
def reduce(request, cnf: Text, verify: bool = False, emit_graph6: bool = False):
    finish(command.reduce(cnf, verify=verify, graph6=emit_graph6))
