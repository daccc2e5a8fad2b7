"""
The module for making algorithm instance.
"""

from typing import Any, Dict, Sequence

from .algorithm import SearchAlgorithm
from .exhaustive import ExhaustiveAlgorithm
from .frontier import FrontierAlgorithm
from ..lattice import IntVector
from ..logger import get_default_logger


class AlgorithmFactory():
    """Static class for registering and making algorithm instances"""

    @staticmethod
    def make(config: Dict[str, Any], rays: Sequence[IntVector]) -> SearchAlgorithm:
        """Initialize a search algorithm based on the given configuration.

        Args:
            config: The 'solver.algorithm' part of the configuration.
            rays: The ray generators.

        Returns
            An object of initialized search algorithm.
        """

        log = get_default_logger('AlgorithmFactory')

        name = config['name']
        assert isinstance(name, str)
        if name == 'frontier':
            algo_config = config[name]
            assert isinstance(algo_config, dict)
            return FrontierAlgorithm(rays=rays, max_level=algo_config['max-level'])
        if name == 'exhaustive':
            algo_config = config[name]
            assert isinstance(algo_config, dict)
            return ExhaustiveAlgorithm(rays=rays,
                                       bound=algo_config['bound'],
                                       batch_size=algo_config['batch-size'])
        log.error('Unrecognized algorithm: %s', name)
        raise RuntimeError()
