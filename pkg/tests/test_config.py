"""
The unit test module of config.
"""

from toricbound.config import build_config, default_config
from toricbound.logger import get_default_logger

LOG = get_default_logger('UNIT-TEST', 'DEBUG')


def test_build_config():
    #pylint:disable=missing-docstring

    LOG.info('=== Testing build_config start')

    # Every attribute is optional
    config = build_config({})
    assert config is not None
    assert config == default_config()
    assert config['kappa']['normalize'] is False
    assert config['solver']['algorithm']['name'] == 'frontier'
    assert config['solver']['algorithm']['frontier']['max-level'] == 0
    assert config['solver']['algorithm']['exhaustive']['bound'] == 4
    assert config['solver']['algorithm']['exhaustive']['batch-size'] == 256
    assert config['width']['search-bound'] == 0
    assert config['width']['max-doublings'] == 4
    assert config['log']['level'] == 'INFO'

    # User specified values
    user_config = {
        'kappa.normalize': True,
        'solver.algorithm.name': 'exhaustive',
        'solver.algorithm.exhaustive.bound': 6,
        'width.search-bound': 3
    }
    config = build_config(user_config)
    assert config is not None
    assert config['kappa']['normalize'] is True
    assert config['solver']['algorithm']['name'] == 'exhaustive'
    assert config['solver']['algorithm']['exhaustive']['bound'] == 6
    assert config['solver']['algorithm']['exhaustive']['batch-size'] == 256
    assert config['width']['search-bound'] == 3

    # The user dict is left untouched
    assert len(user_config) == 4

    LOG.info('=== Testing build_config end')


def test_build_config_errors():
    #pylint:disable=missing-docstring

    LOG.info('=== Testing build_config errors start')

    # Illegal option
    assert build_config({'solver.algorithm.name': 'simplex'}) is None
    assert build_config({'log.level': 'VERBOSE'}) is None
    assert build_config({'kappa.normalize': 'yes'}) is None

    # Illegal integers
    assert build_config({'width.search-bound': -1}) is None
    assert build_config({'width.max-doublings': '4'}) is None
    assert build_config({'solver.algorithm.exhaustive.bound': True}) is None

    # Unrecognized key
    assert build_config({'solver.algorithm.gradient.order': 1}) is None

    LOG.info('=== Testing build_config errors end')
