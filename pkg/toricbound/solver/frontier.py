"""
The frontier search algorithm for minimal non-negative solutions
"""
from typing import Generator, List, Optional, Sequence

from ..lattice import IntVector
from .algorithm import Residuals, SearchAlgorithm


class FrontierAlgorithm(SearchAlgorithm):
    """Find all minimal non-negative solutions of sum a_rho eta_rho = 0 level by level.

    Level k holds candidates of total degree k. A candidate x that is not a solution is
    only extended by e_j when <A(x), eta_j> < 0, where A(x) is its residual, and no
    candidate dominating a known solution is ever produced. Every solution found is
    therefore minimal, and the search stops once the frontier runs empty.

    Attributes:
        max_level: The highest total degree to explore, 0 for no limit.
        solutions: The minimal solutions found so far, in discovery order.
    """

    def __init__(self, rays: Sequence[IntVector], max_level: int = 0):
        """Constructor.

        Args:
            rays: The ray generators.
            max_level: The highest total degree to explore, 0 for no limit.
        """
        super(FrontierAlgorithm, self).__init__(rays)
        self.max_level = max_level
        self.solutions: List[IntVector] = []

    def is_pruned(self, point: IntVector) -> bool:
        """Check if the candidate dominates a known solution."""
        return any(self.dominates(point, sol) for sol in self.solutions)

    def gen(self) -> Generator[List[IntVector], Optional[Residuals], None]:
        #pylint:disable=missing-docstring

        self.log.info('Launch frontier search over %d rays', self.count)

        frontier = [self.unit(idx) for idx in range(self.count)]
        level = 1
        while frontier:
            if self.max_level and level > self.max_level:
                self.log.warning('Stop at level %d with %d pending candidates', level,
                                 len(frontier))
                break

            self.log.debug('Level %d: %d candidates', level, len(frontier))
            results = yield frontier
            assert results is not None

            pending: List[IntVector] = []
            for point in frontier:
                if not any(results[point]):
                    self.solutions.append(point)
                    self.log.debug('Found minimal solution %s', str(point))
                else:
                    pending.append(point)

            seen = set()
            next_frontier: List[IntVector] = []
            for point in pending:
                res = results[point]
                for idx in range(self.count):
                    if self.pairing(res, idx) >= 0:
                        continue
                    cand = self.move_by(point, idx)
                    if cand in seen or self.is_pruned(cand):
                        continue
                    seen.add(cand)
                    next_frontier.append(cand)
            frontier = sorted(next_frontier)
            level += 1

        self.complete = not frontier
        self.log.info('Frontier search finished with %d minimal solutions', len(self.solutions))
