"""
The combinatorial model of a toric variety: rays, maximal cones, validation, point location
and walls.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from logging import Logger
from typing import Dict, FrozenSet, List, NamedTuple, Sequence, Set, Tuple

from .errors import ComputationError, ToricError, ValidationError
from .lattice import IntMatrix, IntVector, is_primitive, smith_normal_form, solve_rational
from .logger import get_default_logger

Cone = Tuple[int, ...]


def get_fan_logger() -> Logger:
    """Attach the logger of this module"""
    return get_default_logger('Fan')


@dataclass(frozen=True)
class Fan():
    """A fan given by its primitive rays and its maximal cones.

    Rays keep the order of the input and are never reordered, so every per-ray vector
    (Kaehler class coefficients, relations) is indexed the same way.

    Attributes:
        dim: The rank n of the lattice N.
        rays: The primitive ray generators.
        max_cones: The maximal cones as sorted tuples of ray indices.
    """

    dim: int
    rays: Tuple[IntVector, ...]
    max_cones: Tuple[Cone, ...]

    def __post_init__(self):
        check_fan_invariants(self)

    @staticmethod
    def build(dim: int, rays: Sequence[Sequence[int]],
              max_cones: Sequence[Sequence[int]]) -> 'Fan':
        """Build a fan from plain lists.

        Args:
            dim: The lattice rank.
            rays: The ray generators.
            max_cones: The maximal cones as lists of ray indices.

        Returns:
            The fan.
        """
        for cone in max_cones:
            if len(set(cone)) != len(cone):
                raise ValidationError(ToricError.Code.INVALID_CONE,
                                      'cone {0} repeats a ray'.format(list(cone)))
        return Fan(dim, tuple(tuple(int(e) for e in ray) for ray in rays),
                   tuple(tuple(sorted(int(i) for i in cone)) for cone in max_cones))

    @property
    def ray_count(self) -> int:
        """The number of rays |Sigma(1)|."""
        return len(self.rays)

    def generators(self, cone: Sequence[int]) -> List[IntVector]:
        """The ray generators of a cone."""
        return [self.rays[idx] for idx in cone]

    def ray_matrix(self) -> IntMatrix:
        """The n x |Sigma(1)| matrix whose columns are the rays."""
        return IntMatrix.from_columns(self.rays, self.dim)

    @cached_property
    def faces(self) -> FrozenSet[FrozenSet[int]]:
        """All generator sets of cones, i.e. all subsets of maximal cones."""
        faces: Set[FrozenSet[int]] = set()
        for cone in self.max_cones:
            for size in range(len(cone) + 1):
                faces.update(frozenset(sub) for sub in combinations(cone, size))
        return frozenset(faces)

    def is_face(self, indices: Sequence[int]) -> bool:
        """Check if the rays generate a cone of the fan."""
        return frozenset(indices) in self.faces


def check_fan_invariants(fan: Fan) -> None:
    """Check the invariants of a fan.

    Args:
        fan: The fan to be checked.
    """
    if fan.dim < 0:
        raise ValidationError(ToricError.Code.SHAPE_MISMATCH, 'negative lattice rank')

    seen: Dict[IntVector, int] = {}
    for idx, ray in enumerate(fan.rays):
        if len(ray) != fan.dim:
            raise ValidationError(ToricError.Code.SHAPE_MISMATCH,
                                  'ray {0} is not of length {1}'.format(idx, fan.dim))
        if not any(ray) or not is_primitive(ray):
            raise ValidationError(ToricError.Code.RAY_NOT_PRIMITIVE,
                                  'ray {0} = {1} is not primitive'.format(idx, list(ray)))
        if ray in seen:
            raise ValidationError(ToricError.Code.DUPLICATE_RAY,
                                  'rays {0} and {1} coincide'.format(seen[ray], idx))
        seen[ray] = idx

    cone_sets = [frozenset(cone) for cone in fan.max_cones]
    for cone, cone_set in zip(fan.max_cones, cone_sets):
        if len(cone_set) != len(cone):
            raise ValidationError(ToricError.Code.INVALID_CONE,
                                  'cone {0} repeats a ray'.format(list(cone)))
        for idx in cone:
            if not 0 <= idx < len(fan.rays):
                raise ValidationError(ToricError.Code.INVALID_CONE,
                                      'cone {0} refers to unknown ray {1}'.format(list(cone), idx))
    for i, first in enumerate(cone_sets):
        for j, second in enumerate(cone_sets):
            if i != j and first <= second:
                raise ValidationError(
                    ToricError.Code.INVALID_CONE,
                    'cone {0} is contained in cone {1}'.format(list(fan.max_cones[i]),
                                                               list(fan.max_cones[j])))


class FanReport(NamedTuple):
    """The validation flags of a fan."""
    simplicial: bool
    smooth: bool
    complete: bool
    pure: bool

    @property
    def smooth_complete(self) -> bool:
        """Indicate if the fan satisfies the standing hypotheses of the bounds."""
        return self.smooth and self.complete


class Wall(NamedTuple):
    """A codimension-one cone shared by two maximal cones."""
    facet: Cone
    neighbors: Tuple[Cone, Cone]

    def opposite_rays(self) -> Tuple[int, int]:
        """The rays of the two neighbors that are not in the facet."""
        first = [idx for idx in self.neighbors[0] if idx not in self.facet]
        second = [idx for idx in self.neighbors[1] if idx not in self.facet]
        assert len(first) == 1 and len(second) == 1
        return (first[0], second[0])


class ConeLocation(NamedTuple):
    """The cone containing a vector in its relative interior, with the positive coefficients
    of the vector on the cone generators."""
    cone: Cone
    coefficients: Tuple[Fraction, ...]


def _facet_neighbors(fan: Fan) -> Dict[Cone, List[Cone]]:
    """Map every facet of every maximal cone to the maximal cones containing it."""
    neighbors: Dict[Cone, List[Cone]] = {}
    for cone in fan.max_cones:
        if not cone:
            continue
        for facet in combinations(cone, len(cone) - 1):
            if facet not in neighbors:
                neighbors[facet] = [
                    other for other in fan.max_cones if set(facet).issubset(other)
                ]
    return neighbors


def _is_connected(fan: Fan, neighbors: Dict[Cone, List[Cone]]) -> bool:
    """Check if the maximal cones are connected through shared facets."""
    if not fan.max_cones:
        return False
    adjacency: Dict[Cone, Set[Cone]] = {cone: set() for cone in fan.max_cones}
    for cones in neighbors.values():
        for cone in cones:
            adjacency[cone].update(c for c in cones if c != cone)

    visited = {fan.max_cones[0]}
    queue = deque([fan.max_cones[0]])
    while queue:
        for nxt in adjacency[queue.popleft()]:
            if nxt not in visited:
                visited.add(nxt)
                queue.append(nxt)
    return len(visited) == len(fan.max_cones)


@lru_cache(maxsize=256)
def validate_fan(fan: Fan) -> FanReport:
    """Decide whether the fan is simplicial, smooth, pure and complete.

    Completeness is decided combinatorially: the fan is pure, every facet of every maximal
    cone lies in exactly two maximal cones and the maximal cones are connected through their
    facets.

    Args:
        fan: The fan to be validated.

    Returns:
        The validation flags.
    """
    log = get_fan_logger()
    check_fan_invariants(fan)

    simplicial = True
    smooth = True
    pure = True
    for cone in fan.max_cones:
        if not cone:
            pure = pure and fan.dim == 0
            continue
        gens = IntMatrix.from_columns(fan.generators(cone), fan.dim)
        rank = gens.rank()
        if rank != len(cone):
            simplicial = False
            smooth = False
        elif smooth:
            diagonal = smith_normal_form(gens).diagonal
            smooth = all(d == 1 for d in diagonal)
        if rank != fan.dim:
            pure = False

    complete = False
    if simplicial and pure and fan.max_cones:
        neighbors = _facet_neighbors(fan)
        paired = all(len(cones) == 2 for cones in neighbors.values())
        complete = paired and _is_connected(fan, neighbors)
    elif not simplicial:
        log.warning('Completeness is only decided for simplicial fans')

    report = FanReport(simplicial=simplicial, smooth=smooth, complete=complete, pure=pure)
    log.debug('Fan validation: %s', str(report))
    return report


def require_complete(fan: Fan) -> None:
    """Reject fans whose support is not the whole space.

    Args:
        fan: The fan to be checked.
    """
    if not validate_fan(fan).complete:
        raise ValidationError(ToricError.Code.NOT_COMPLETE, 'the fan is not complete')


def require_smooth_complete(fan: Fan) -> None:
    """Reject fans that are not smooth and complete.

    Args:
        fan: The fan to be checked.
    """
    report = validate_fan(fan)
    if not report.smooth_complete:
        raise ValidationError(
            ToricError.Code.NOT_SMOOTH_COMPLETE,
            'fan is not smooth and complete (smooth={0}, complete={1})'.format(
                report.smooth, report.complete))


def locate_cone(fan: Fan, vec: Sequence[int]) -> ConeLocation:
    """Find the cone containing the vector in its relative interior.

    Args:
        fan: A simplicial fan.
        vec: An integer (or rational) vector of length n.

    Returns:
        The cone and the positive coefficients of the vector on its generators. The zero
        vector lies in the zero cone, with no coefficients.
    """
    if len(vec) != fan.dim:
        raise ValidationError(ToricError.Code.SHAPE_MISMATCH,
                              'vector of length {0} in rank {1}'.format(len(vec), fan.dim))
    target = tuple(Fraction(e) for e in vec)
    if not any(target):
        return ConeLocation((), ())

    for cone in fan.max_cones:
        coeffs = solve_rational(fan.generators(cone), target)
        if coeffs is None or any(c < 0 for c in coeffs):
            continue
        face = tuple(idx for idx, c in zip(cone, coeffs) if c > 0)
        return ConeLocation(face, tuple(c for c in coeffs if c > 0))

    raise ComputationError(ToricError.Code.OUTSIDE_SUPPORT,
                           'vector {0} is outside the support of the fan'.format(list(vec)))


def walls(fan: Fan) -> List[Wall]:
    """List every codimension-one face of the maximal cones with its two neighbors.

    Args:
        fan: A smooth complete fan.

    Returns:
        The walls ordered by facet.
    """
    result: List[Wall] = []
    for facet, cones in sorted(_facet_neighbors(fan).items()):
        if len(cones) != 2:
            raise ComputationError(
                ToricError.Code.NOT_COMPLETE,
                'facet {0} lies in {1} maximal cone(s)'.format(list(facet), len(cones)))
        result.append(Wall(facet, (cones[0], cones[1])))
    return result
