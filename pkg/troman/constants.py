import os
import re

TROMAN_CONSOLE_LOG_LEVEL = os.environ.get('TROMAN_CONSOLE_LOG_LEVEL', 'INFO')

TROMAN_THREADS_ENV_VAR_NAME = 'TROMAN_THREADS'

# bitset widths. python ints are unbounded, so the wide cap runs the same code.
VERTEX_CAP = 64
WIDE_VERTEX_CAP = 128

ORACLE_CAP = 12
ALL_FUNCTIONS_CAP = 14
SAT_CAP = 24
EXHAUSTIVE_BONDAGE_MAX_EDGES = 12
EDGE_CUT_CAP = 12
REDUCTION_SOLVER_CAP = 40

DEFAULT_SEED = 20240229
DEFAULT_EXHAUSTIVE_ORDER = 6
SLOW_EXHAUSTIVE_ORDER = 7

GAMMA_TR_CACHE_SIZE = 1 << 17
BONDAGE_CACHE_SIZE = 1 << 14

LABEL_VALUES = (0, 1, 2)

BONDAGE_KINDS = ('tr', 't', 'r', 'qtr', 'plain')

GRAPH_FORMATS = ('graph6', 'edges')

RE_FAMILY_SPEC = re.compile(r'^\s*([A-Za-z]+)\s*:\s*(.*?)\s*$')
RE_CORPUS_SPEC = re.compile(r'^\s*(all|random|families|file)\s*:\s*(.+?)\s*$')
RE_THEOREM_ID = re.compile(r'^T([1-9]\d*)$')
