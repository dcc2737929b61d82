"""
# Corpora
Graph sources for the theorem suite. Every corpus yields isolate-free
graphs in a fixed order, so a suite run is reproducible from its spec text.
"""

from itertools import combinations
from typing import (
    Dict,
    Iterator,
    List,
    Text,
)

import numpy as np

from appyratus.files import File
from appyratus.utils.path_utils import PathUtils

from troman.constants import DEFAULT_SEED, RE_CORPUS_SPEC, VERTEX_CAP
from troman.exceptions import TromanError, UsageError
from troman.families import FamilySpec
from troman.graph import Graph
from troman.io import parse_graph6
from troman.utils import say

# a random corpus gives up after this many draws per requested graph
RANDOM_ATTEMPT_FACTOR = 1000


class CorpusSpec(object):
    """
    # CorpusSpec
    Base class of the four corpus modes. Subclasses implement `graphs`.
    """

    mode = None

    def graphs(self) -> Iterator[Graph]:
        raise NotImplementedError('override in subclass')

    def to_dict(self) -> Dict:
        raise NotImplementedError('override in subclass')

    def collect(self) -> List[Graph]:
        graphs = list(self.graphs())
        say('corpus ready', corpus=str(self), size=len(graphs))
        return graphs

    def __repr__(self):
        return '<{}({})>'.format(self.__class__.__name__, str(self))

    @staticmethod
    def parse(text: Text, seed: int = DEFAULT_SEED) -> 'CorpusSpec':
        """
        Read `all:<max_n>`, `random:<count>,<n>,<p>[,<seed>]`,
        `families:<spec>;<spec>;...` or `file:<path>`. `seed` applies to a
        random corpus that names none.
        """
        match = RE_CORPUS_SPEC.match(text or '')
        if not match:
            raise UsageError('unrecognized corpus spec {!r}'.format(text))
        mode, raw = match.groups()
        try:
            if mode == 'all':
                return AllConnected(int(raw))
            if mode == 'random':
                parts = [p.strip() for p in raw.split(',')]
                if len(parts) not in (3, 4):
                    raise UsageError('random corpus takes count,n,p[,seed]')
                seed = int(parts[3]) if len(parts) == 4 else seed
                return RandomCorpus(int(parts[0]), int(parts[1]), float(parts[2]), seed)
            if mode == 'families':
                specs = [FamilySpec.parse(s) for s in raw.split(';') if s.strip()]
                return FamiliesCorpus(specs)
            return FileCorpus(raw)
        except ValueError:
            raise UsageError('bad numbers in corpus spec {!r}'.format(text))


class AllConnected(CorpusSpec):
    """
    Every labeled connected graph on 2..max_n vertices. Order is by vertex
    count, then by the bit pattern over the canonical vertex pairs.
    """

    mode = 'all'

    def __init__(self, max_n: int):
        if not 2 <= max_n <= VERTEX_CAP:
            raise UsageError('all-graphs corpus needs 2 <= max_n <= {}'.format(VERTEX_CAP))
        self.max_n = max_n

    def __str__(self):
        return 'all:{}'.format(self.max_n)

    def to_dict(self) -> Dict:
        return {'mode': self.mode, 'max_n': self.max_n}

    def graphs(self) -> Iterator[Graph]:
        for n in range(2, self.max_n + 1):
            for graph in iter_labeled_graphs(n):
                if graph.is_connected():
                    yield graph


def iter_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for pattern in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if pattern >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, adj)


class RandomCorpus(CorpusSpec):
    """
    G(n, p) samples drawn with numpy's PCG64 generator. One uniform draw per
    vertex pair, pairs in canonical order; draws with an isolated vertex are
    discarded until `count` graphs are accepted.
    """

    mode = 'random'

    def __init__(self, count: int, n: int, edge_prob: float, seed: int = DEFAULT_SEED):
        if count < 0 or not 2 <= n <= VERTEX_CAP:
            raise UsageError('random corpus needs count >= 0 and 2 <= n <= {}'.format(VERTEX_CAP))
        if not 0.0 < edge_prob <= 1.0:
            raise UsageError('edge probability must lie in (0, 1]')
        self.count = count
        self.n = n
        self.edge_prob = edge_prob
        self.seed = seed

    def __str__(self):
        return 'random:{},{},{},{}'.format(self.count, self.n, self.edge_prob, self.seed)

    def to_dict(self) -> Dict:
        return {
            'mode': self.mode,
            'count': self.count,
            'n': self.n,
            'edge_prob': self.edge_prob,
            'seed': self.seed,
        }

    def graphs(self) -> Iterator[Graph]:
        rng = np.random.Generator(np.random.PCG64(self.seed))
        pairs = list(combinations(range(self.n), 2))
        accepted = 0
        attempts = 0
        while accepted < self.count:
            attempts += 1
            if attempts > RANDOM_ATTEMPT_FACTOR * max(1, self.count):
                raise UsageError('edge probability too small to draw isolate-free graphs')
            keep = rng.random(len(pairs)) < self.edge_prob
            edges = [pair for pair, flag in zip(pairs, keep) if flag]
            graph = Graph.from_edge_list(self.n, edges)
            if graph.has_isolated_vertex():
                continue
            accepted += 1
            yield graph


class FamiliesCorpus(CorpusSpec):

    mode = 'families'

    def __init__(self, specs: List[FamilySpec]):
        self.specs = list(specs)

    def __str__(self):
        return 'families:' + ';'.join(str(s) for s in self.specs)

    def to_dict(self) -> Dict:
        return {'mode': self.mode, 'specs': [str(s) for s in self.specs]}

    def graphs(self) -> Iterator[Graph]:
        for spec in self.specs:
            yield spec.generate().graph


class FileCorpus(CorpusSpec):
    """
    One graph6 string per line. Blank lines and lines starting with '#' are
    ignored; graphs with an isolated vertex are dropped.
    """

    mode = 'file'

    def __init__(self, path: Text):
        self.path = path

    def __str__(self):
        return 'file:{}'.format(self.path)

    def to_dict(self) -> Dict:
        return {'mode': self.mode, 'path': self.path}

    def graphs(self) -> Iterator[Graph]:
        if not PathUtils.exists(self.path):
            raise UsageError('corpus file not found: {}'.format(self.path))
        text = File.read(self.path)
        for lineno, line in enumerate((text or '').splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            try:
                graph = parse_graph6(line)
            except TromanError as exc:
                raise UsageError('{}:{}: {}'.format(self.path, lineno, exc))
            if graph.has_isolated_vertex():
                say('dropping corpus graph with an isolated vertex', line=lineno)
                continue
            yield graph

