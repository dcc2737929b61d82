import os

from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Text,
)

from appyratus.files import Json, Yaml
from appyratus.utils.path_utils import PathUtils

from .constants import TROMAN_THREADS_ENV_VAR_NAME
from .exceptions import UsageError
from .logging import logger


def say(message, **data) -> None:
    logger.debug(message, data=data if data else None)


def shout(message, **data) -> None:
    if isinstance(message, Exception):
        message = repr(message)
    logger.error(message, data=data if data else None)


def iter_bits(mask: int) -> Iterator[int]:
    """
    Yield the indices of the set bits of `mask`, lowest first.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_to_list(mask: int) -> List[int]:
    return list(iter_bits(mask))


def resolve_thread_count(explicit: int = None) -> int:
    """
    Worker count for corpus evaluation: an explicit value wins, then the
    TROMAN_THREADS environment variable, then a single in-process worker.
    """
    if explicit is not None:
        return max(1, int(explicit))
    raw = os.environ.get(TROMAN_THREADS_ENV_VAR_NAME)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        shout(f'ignoring non-integer {TROMAN_THREADS_ENV_VAR_NAME}', value=raw)
        return 1


def read_config_file(path: Text) -> Dict:
    """
    Read a suite config file. YAML and JSON are both accepted, chosen by
    extension the way context files are resolved.
    """
    path = os.path.abspath(os.path.expanduser(path))
    if not PathUtils.exists(path):
        raise UsageError(f'config file not found: {path}')
    ext = PathUtils.get_extension(path)
    if ext and ext.lower() in Json.extensions():
        data = Json.read(path)
    else:
        data = Yaml.read(path)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise UsageError(f'config file must hold a mapping: {path}')
    say(f'loaded suite config from {path}', keys=sorted(data))
    return data
