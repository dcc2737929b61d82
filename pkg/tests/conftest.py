import pytest


def pytest_addoption(parser):
    parser.addoption(
        '--slow', action='store_true', default=False,
        help='run exhaustive corpora and large reduction instances',
    )


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: skipped unless --slow is given')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--slow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --slow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)
