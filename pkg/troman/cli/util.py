import os
import sys

from typing import Text

from appyratus.files import File
from appyratus.utils.path_utils import PathUtils

from troman.constants import RE_FAMILY_SPEC
from troman.exceptions import UsageError
from troman.families import FamilySpec
from troman.graph import Graph
from troman.io import parse_graph6, parse_graph_text


def expand_path(path):
    return os.path.abspath(os.path.expandvars(os.path.expanduser(path)))


def read_text_argument(arg: Text, stdin=None) -> Text:
    """
    '-' reads standard input, anything else is a file path.
    """
    if arg == '-':
        return (stdin or sys.stdin).read()
    path = expand_path(arg)
    if not PathUtils.exists(path):
        raise UsageError('file not found: {}'.format(arg))
    return File.read(path)


def resolve_graph(arg: Text, stdin=None) -> Graph:
    """
    A graph argument is '-' (stdin), a file holding a graph6 line or an
    edge list, a family spec such as spider:2,4, or an inline graph6 string.
    """
    if not arg:
        raise UsageError('missing graph argument')
    if arg == '-' or PathUtils.exists(expand_path(arg)):
        return parse_graph_text(read_text_argument(arg, stdin))
    if RE_FAMILY_SPEC.match(arg):
        return FamilySpec.parse(arg).generate().graph
    return parse_graph6(arg)
