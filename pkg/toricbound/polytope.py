"""
Momentum polytopes: construction, exact vertex enumeration, directional and lattice widths.

The inequality convention is <m, eta_rho> >= -kappa_rho, so the divisor sum kappa_rho D_rho
corresponds to the polytope with inner facet normals eta_rho.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from logging import Logger
from math import ceil
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .divisor import KaehlerClass
from .errors import ComputationError, ToricError, ValidationError
from .fan import Fan, require_complete
from .lattice import (IntMatrix, IntVector, RationalVector, is_primitive, kernel_basis,
                      rational_rank, solve_rational)
from .logger import get_default_logger

Halfspace = Tuple[IntVector, Fraction]


def get_polytope_logger() -> Logger:
    """Attach the logger of this module"""
    return get_default_logger('Polytope')


def _feasible(point: RationalVector, normals: Sequence[Sequence[int]],
              offsets: Sequence[Fraction]) -> bool:
    return all(
        sum((m * e for m, e in zip(point, normal)), Fraction(0)) >= offset
        for normal, offset in zip(normals, offsets))


def enumerate_vertices(normals: Sequence[Sequence[int]], offsets: Sequence[Fraction],
                       dim: int) -> List[RationalVector]:
    """Intersect every n-subset of constraint hyperplanes <m, normal> = offset with full-rank
    normals and keep the feasible points.

    Args:
        normals: The integer normals.
        offsets: The right-hand sides of <m, normal> >= offset.
        dim: The ambient dimension n.

    Returns:
        The distinct feasible vertices in lexicographic order.
    """
    if dim == 0:
        return [()] if all(offset <= 0 for offset in offsets) else []

    found = set()
    for subset in combinations(range(len(normals)), dim):
        rows = [normals[idx] for idx in subset]
        if rational_rank(rows, dim) != dim:
            continue
        # The columns of the system are the coordinates of the chosen normals
        columns = [[row[j] for row in rows] for j in range(dim)]
        point = solve_rational(columns, [Fraction(offsets[idx]) for idx in subset])
        if point is not None and _feasible(point, normals, offsets):
            found.add(point)
    return sorted(found)


@dataclass(frozen=True)
class LatticePolytope():
    """A polytope {m : <m, normal> >= offset for every halfspace}.

    Attributes:
        dim: The dimension n of M.
        halfspaces: The (normal, offset) pairs.
    """

    dim: int
    halfspaces: Tuple[Halfspace, ...]

    @property
    def normals(self) -> List[IntVector]:
        """The normals of all halfspaces."""
        return [normal for normal, _ in self.halfspaces]

    @property
    def offsets(self) -> List[Fraction]:
        """The offsets of all halfspaces."""
        return [offset for _, offset in self.halfspaces]

    @cached_property
    def vertices(self) -> List[RationalVector]:
        """The vertices, computed on first access."""
        return vertices(self)

    def contains(self, point: Sequence[Fraction]) -> bool:
        """Check if the point satisfies every constraint."""
        return _feasible(tuple(Fraction(e) for e in point), self.normals, self.offsets)

    def translate(self, shift: Sequence[Fraction]) -> 'LatticePolytope':
        """The polytope moved by the vector shift."""
        return LatticePolytope(
            self.dim,
            tuple((normal, offset + sum((Fraction(s) * e for s, e in zip(shift, normal)),
                                        Fraction(0))) for normal, offset in self.halfspaces))


def momentum_polytope(fan: Fan, kappa: KaehlerClass) -> LatticePolytope:
    """Build P = {m : <m, eta_rho> >= -kappa_rho for every ray}.

    Args:
        fan: A complete fan.
        kappa: The Kaehler class.

    Returns:
        The momentum polytope with its vertices checked.
    """
    if len(kappa) != fan.ray_count:
        raise ValidationError(ToricError.Code.SHAPE_MISMATCH,
                              'class of length {0} for {1} rays'.format(len(kappa),
                                                                        fan.ray_count))
    require_complete(fan)

    poly = LatticePolytope(fan.dim, tuple(zip(fan.rays, (-k for k in kappa.kappa))))
    get_polytope_logger().debug('Momentum polytope with %d vertices', len(poly.vertices))
    return poly


def _recession_directions(poly: LatticePolytope) -> List[IntVector]:
    """Candidate extreme rays of the recession cone of a polytope with full-rank normals."""
    if poly.dim == 1:
        return [(1, ), (-1, )]
    directions: List[IntVector] = []
    for subset in combinations(poly.normals, poly.dim - 1):
        if rational_rank(subset, poly.dim) != poly.dim - 1:
            continue
        basis = kernel_basis(IntMatrix.from_rows(subset, poly.dim))
        directions.extend(basis)
        directions.extend(tuple(-e for e in vec) for vec in basis)
    return directions


def vertices(poly: LatticePolytope) -> List[RationalVector]:
    """Compute the exact vertex set of a bounded polytope.

    Args:
        poly: The polytope.

    Returns:
        The vertices in lexicographic order.
    """
    if poly.dim == 0:
        found = enumerate_vertices(poly.normals, poly.offsets, 0)
    else:
        if rational_rank(poly.normals, poly.dim) != poly.dim:
            raise ComputationError(ToricError.Code.UNBOUNDED,
                                   'the normals do not span, so the polytope has lines')
        found = enumerate_vertices(poly.normals, poly.offsets, poly.dim)
        if found:
            for direction in _recession_directions(poly):
                if all(
                        sum(d * e for d, e in zip(direction, normal)) >= 0
                        for normal in poly.normals):
                    raise ComputationError(
                        ToricError.Code.UNBOUNDED,
                        'the polytope recedes along {0}'.format(list(direction)))

    if not found:
        raise ComputationError(ToricError.Code.EMPTY_POLYTOPE, 'the constraints are infeasible')
    return found


def width_along(poly: LatticePolytope, direction: Sequence[int]) -> Fraction:
    """Compute width_u(P) = max <u, x> - min <u, x> over the polytope.

    Args:
        poly: A bounded polytope.
        direction: A non-zero integer functional u.

    Returns:
        The width.
    """
    if len(direction) != poly.dim:
        raise ValidationError(ToricError.Code.SHAPE_MISMATCH,
                              'direction of length {0} in rank {1}'.format(
                                  len(direction), poly.dim))
    if not any(direction):
        raise ValidationError(ToricError.Code.ZERO_DIRECTION, 'the direction is zero')
    values = [sum((u * x for u, x in zip(direction, vert)), Fraction(0)) for vert in poly.vertices]
    return max(values) - min(values)


class WidthResult(NamedTuple):
    """The lattice width with the direction attaining it.

    Attributes:
        value: The minimum width found.
        direction: The lexicographically smallest direction attaining it.
        certified: Whether the value is known to be the global minimum.
        search_bound: The final sup-norm bound of the direction search.
    """
    value: Fraction
    direction: IntVector
    certified: bool
    search_bound: int


def default_search_bound(poly: LatticePolytope) -> int:
    """The largest vertex coordinate spread plus one."""
    verts = poly.vertices
    spread = max(
        (max(v[i] for v in verts) - min(v[i] for v in verts) for i in range(poly.dim)),
        default=Fraction(0))
    return max(int(ceil(spread)) + 1, 1)


def _directions(dim: int, bound: int) -> List[IntVector]:
    """The primitive directions with sup-norm at most bound, one of each +-u pair."""
    result = []
    for vec in product(range(-bound, bound + 1), repeat=dim):
        if not any(vec) or not is_primitive(vec):
            continue
        if next(e for e in vec if e != 0) > 0:
            result.append(vec)
    return result


def lattice_width(poly: LatticePolytope,
                  search_bound: Optional[int] = None,
                  certificate: Optional[Fraction] = None,
                  max_doublings: int = 4) -> WidthResult:
    """Compute width(P) = min width_u(P) over primitive directions u.

    The directions are searched in a sup-norm box. When a certificate (a known lower bound
    attained by the width, such as gamma) is given, the box is doubled while the minimum
    found exceeds it, at most max_doublings times, and the result is certified once they agree.

    Args:
        poly: A bounded polytope.
        search_bound: The sup-norm bound of the directions; derived from the vertex spread
                      if None.
        certificate: A lower bound of the lattice width.
        max_doublings: How often the bound may be doubled.

    Returns:
        The width result.
    """
    log = get_polytope_logger()
    if poly.dim == 0:
        return WidthResult(Fraction(0), (), True, 0)

    bound = search_bound if search_bound else default_search_bound(poly)
    doublings = 0
    while True:
        best: Optional[Tuple[Fraction, IntVector]] = None
        for direction in _directions(poly.dim, bound):
            width = width_along(poly, direction)
            if best is None or width < best[0]:
                best = (width, direction)
        assert best is not None
        log.debug('Lattice width %s along %s within bound %d', str(best[0]), str(best[1]),
                  bound)

        if certificate is None:
            return WidthResult(best[0], best[1], False, bound)
        if best[0] <= certificate:
            return WidthResult(best[0], best[1], best[0] == certificate, bound)
        if doublings >= max_doublings:
            log.warning('Lattice width %s above its certificate %s after %d doublings',
                        str(best[0]), str(certificate), doublings)
            return WidthResult(best[0], best[1], False, bound)
        bound *= 2
        doublings += 1
