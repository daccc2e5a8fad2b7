"""
The exhaustive search algorithm
"""
from typing import Generator, List, Optional, Sequence

from ..lattice import IntVector
from .algorithm import Residuals, SearchAlgorithm


class ExhaustiveAlgorithm(SearchAlgorithm):
    """Exhaustively enumerate non-negative candidates in a box.

    Every entry ranges over [0, bound] and the total degree over [min_degree, max_degree].
    Minimal solutions with an entry above the bound lie outside the box, so the search is
    never marked complete.
    Considering the evaluation overhead, we let users configure the batch size.

    Attributes:
        bound: The largest value of every entry.
        batch_size: The batch size of producing candidates.
        min_degree: The smallest total degree.
        max_degree: The largest total degree.
    """

    def __init__(self,
                 rays: Sequence[IntVector],
                 bound: int = 4,
                 batch_size: int = 256,
                 min_degree: int = 1,
                 max_degree: Optional[int] = None):
        """Constructor.

        Args:
            rays: The ray generators.
            bound: The largest value of every entry.
            batch_size: The batch size of producing candidates.
            min_degree: The smallest total degree, at least one to skip the zero vector.
            max_degree: The largest total degree, unlimited if None.
        """
        super(ExhaustiveAlgorithm, self).__init__(rays)
        self.bound = bound
        self.batch_size = max(batch_size, 1)
        self.min_degree = max(min_degree, 1)
        self.max_degree = bound * len(self.rays) if max_degree is None else max_degree

    def traverse(self, point: IntVector, idx: int,
                 degree: int) -> Generator[IntVector, None, None]:
        """DFS traverse the box and yield leaf candidates.

        Args:
            point: The current candidate prefix.
            idx: The current manipulated coefficient index.
            degree: The total degree of the prefix.

        Returns:
            A recursive generator for traversing.
        """

        if idx == self.count:
            if degree >= self.min_degree:
                yield point
            return

        value = 0
        while value <= self.bound and degree + value <= self.max_degree:
            yield from self.traverse(point + (value, ), idx + 1, degree + value)
            value += 1

    def gen(self) -> Generator[List[IntVector], Optional[Residuals], None]:
        #pylint:disable=missing-docstring

        self.log.info('Launch exhaustive search with bound %d and degree range [%d, %d]',
                      self.bound, self.min_degree, self.max_degree)

        traverser = self.traverse((), 0, 0)
        iter_cnt = 0
        while True:
            next_points: List[IntVector] = []
            try:
                iter_cnt += 1
                while len(next_points) < self.batch_size:
                    next_points.append(next(traverser))
                self.log.debug('Batch %d', iter_cnt)
                yield next_points
            except StopIteration:
                if next_points:
                    yield next_points
                break

        self.log.info('No more candidates to be explored, stop.')
