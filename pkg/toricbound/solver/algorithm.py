"""
The main module of search algorithm.
"""
from typing import Dict, Generator, List, Optional, Sequence

from ..lattice import IntVector
from ..logger import get_default_logger

# The verdict the explorer sends back for every candidate: its residual sum a_rho eta_rho
Residuals = Dict[IntVector, IntVector]


class SearchAlgorithm():
    """Base class of search algorithms for non-negative integer relations among rays.

    The base search algorithm includes a set of functions to manipulate coefficient vectors
    and the generator prototype for search algorithms to implement.

    Attributes:
        rays: The ray generators.
        count: The number of rays, i.e. the length of every candidate.
        dim: The lattice rank.
        complete: Whether the finished search covered every minimal solution.
        log: The logger.
    """

    def __init__(self, rays: Sequence[IntVector]):
        self.rays = tuple(tuple(ray) for ray in rays)
        self.count = len(self.rays)
        self.dim = len(self.rays[0]) if self.rays else 0
        self.complete = False
        self.log = get_default_logger('Search')

    def residual(self, point: IntVector) -> IntVector:
        """Evaluate sum a_rho eta_rho of a candidate.

        Args:
            point: The coefficient vector.

        Returns:
            The residual vector in N.
        """
        return tuple(
            sum(coef * ray[i] for coef, ray in zip(point, self.rays) if coef)
            for i in range(self.dim))

    def pairing(self, residual: IntVector, idx: int) -> int:
        """The inner product of a residual with the idx-th ray."""
        return sum(r * e for r, e in zip(residual, self.rays[idx]))

    def unit(self, idx: int) -> IntVector:
        """The idx-th standard basis vector."""
        return tuple(int(i == idx) for i in range(self.count))

    @staticmethod
    def move_by(point: IntVector, idx: int, step: int = 1) -> IntVector:
        """Add step to the idx-th coefficient of a candidate.

        Args:
            point: The candidate to start from.
            idx: The target coefficient.
            step: The amount to add.

        Returns:
            A new candidate.
        """
        return point[:idx] + (point[idx] + step, ) + point[idx + 1:]

    @staticmethod
    def dominates(point: IntVector, other: IntVector) -> bool:
        """Check point >= other componentwise."""
        return all(a >= b for a, b in zip(point, other))

    def gen(self) -> Generator[List[IntVector], Optional[Residuals], None]:
        """The main generator function of search algorithm.

        Returns:
            A generator that keeps producing candidate batches and receives their residuals.
        """
        raise NotImplementedError()
