"""
The main module of explorer.
"""
from typing import List, Optional

from ..lattice import IntVector
from ..logger import get_default_logger
from .algorithm import Residuals, SearchAlgorithm


class Explorer():
    """Drive a search algorithm and collect the candidates that are relations.

    Attributes:
        algo: The search algorithm.
        log: Logger object.
        explored_point: So far explored candidates.
        relations: So far found candidates with zero residual.
    """

    def __init__(self, algo: SearchAlgorithm):
        """Constructor.

        Args:
            algo: The search algorithm to be driven.
        """
        self.algo = algo
        self.log = get_default_logger('Explorer')
        self.explored_point = 0
        self.relations: List[IntVector] = []

    def run(self) -> List[IntVector]:
        """The main function of the explorer to launch the search algorithm.

        Returns:
            The sorted relations found by the algorithm.
        """
        gen_next = self.algo.gen()

        results: Optional[Residuals] = None
        while True:
            try:
                # Generate the next set of candidates
                next_points = gen_next.send(results)
                self.log.debug('The algorithm generates %d candidates', len(next_points))
            except StopIteration:
                break

            results = {}
            for point in next_points:
                res = self.algo.residual(point)
                results[point] = res
                if not any(res):
                    self.relations.append(point)
            self.explored_point += len(next_points)

        self.log.info('Explored %d candidates, found %d relations', self.explored_point,
                      len(self.relations))
        return sorted(set(self.relations))
