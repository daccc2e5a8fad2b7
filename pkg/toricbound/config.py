"""
Toricbound config settings
"""
from typing import Any, Dict, Optional

from .logger import get_default_logger

# All configurable attributes. Please follow the following rules if you want to add new config.
# 1) Follow the naming: <main-category>.<attribute>.<sub-attribute>
# 2) 'require' is necessary for every config.
# 3) If the config is optional ('require' is False), then 'default' is necessary.
# 4) If the config is limited to certain options, add 'options' to the config attribute.
CONFIG_SETTING: Dict[str, Dict[str, Any]] = {
    'kappa.normalize': {
        'require': False,
        'default': False,
        'options': [False, True]
    },
    'solver.algorithm.name': {
        'require': False,
        'default': 'frontier',
        'options': ['frontier', 'exhaustive']
    },
    'solver.algorithm.frontier.max-level': {
        'require': False,
        'default': 0
    },
    'solver.algorithm.exhaustive.bound': {
        'require': False,
        'default': 4
    },
    'solver.algorithm.exhaustive.batch-size': {
        'require': False,
        'default': 256
    },
    'width.search-bound': {
        'require': False,
        'default': 0
    },
    'width.max-doublings': {
        'require': False,
        'default': 4
    },
    'log.level': {
        'require': False,
        'default': 'INFO',
        'options': ['DEBUG', 'INFO', 'WARNING', 'ERROR']
    }
}

# Attributes that must be non-negative integers
INT_SETTINGS = [
    'solver.algorithm.frontier.max-level', 'solver.algorithm.exhaustive.bound',
    'solver.algorithm.exhaustive.batch-size', 'width.search-bound', 'width.max-doublings'
]


def build_config(user_config: Dict[str, Any]) -> Optional[Dict[str, Any]]:
    """Check user config and apply default value to optional configs.

    Args:
        user_config: The user config to be referred.

    Returns:
        A nested dict of configs, or None if there has any errors.
    """

    log = get_default_logger('Config')

    # Do not touch the caller's dict
    user_config = dict(user_config)

    # Check user config and make up optional values
    error = 0
    for key, attr in CONFIG_SETTING.items():
        if key in user_config:
            if 'options' in attr:
                # Specified config, check if it is legal
                if user_config[key] not in attr['options']:
                    log.error('"%s" is not a valid option for %s', user_config[key], key)
                    error += 1
            elif key in INT_SETTINGS:
                value = user_config[key]
                if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                    log.error('%s must be a non-negative integer but got "%s"', key, value)
                    error += 1
        else:
            # Missing config, check if it is optional (set to default if so)
            if attr['require']:
                log.error('Missing "%s" in the config which is required', key)
                error += 1
            else:
                log.debug('Use default value for %s: %s', key, str(attr['default']))
                user_config[key] = attr['default']

    for key in user_config.keys():
        if key not in CONFIG_SETTING:
            log.error('Unrecognized config key: %s', key)
            error += 1

    if error > 0:
        return None

    # Build config
    config: Dict[str, Any] = {}
    for key, attr in user_config.items():
        curr = config
        levels = key.split('.')
        for level in levels[:-1]:
            if level not in curr:
                curr[level] = {}
            curr = curr[level]
        curr[levels[-1]] = attr

    return config


def default_config() -> Dict[str, Any]:
    """Build the config with all default values.

    Returns:
        A nested dict of configs.
    """
    config = build_config({})
    assert config is not None
    return config
