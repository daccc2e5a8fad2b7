"""
Divisor classes and curve classes: the Kaehler class data, the class group, the intersection
pairing, ampleness and the normalization of Kaehler class representatives.
"""
from dataclasses import dataclass
from fractions import Fraction
from logging import Logger
from typing import Sequence, Tuple, Union

from .errors import ComputationError, ToricError, ValidationError
from .fan import Fan, Wall, require_smooth_complete, walls
from .lattice import (IntMatrix, IntVector, RationalVector, rational_rank, smith_normal_form,
                      solve_rational)
from .logger import get_default_logger


def get_divisor_logger() -> Logger:
    """Attach the logger of this module"""
    return get_default_logger('Divisor')


@dataclass(frozen=True)
class KaehlerClass():
    """The coefficients kappa of [omega] = sum kappa_rho [D_rho], one per ray.

    Attributes:
        kappa: Exact rational coefficients indexed like the rays.
    """

    kappa: RationalVector

    @staticmethod
    def of(values: Sequence[Union[int, str, Fraction]]) -> 'KaehlerClass':
        """Build a class from integers, fractions or rational strings."""
        return KaehlerClass(tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.kappa)

    def scale(self, factor: Union[int, Fraction]) -> 'KaehlerClass':
        """Multiply the class by a rational factor."""
        return KaehlerClass(tuple(k * Fraction(factor) for k in self.kappa))

    def is_nonnegative(self) -> bool:
        """Indicate if every coefficient is non-negative."""
        return all(k >= 0 for k in self.kappa)


@dataclass(frozen=True)
class Relation():
    """An integer relation sum a_rho eta_rho = 0, i.e. a numerical curve class.

    Attributes:
        a: The coefficients indexed like the rays.
    """

    a: IntVector

    @staticmethod
    def of(values: Sequence[int]) -> 'Relation':
        """Build a relation from a list of integers."""
        return Relation(tuple(int(v) for v in values))

    @property
    def nonneg(self) -> bool:
        """Indicate if all entries are non-negative and not all are zero."""
        return all(e >= 0 for e in self.a) and any(self.a)

    @property
    def total_degree(self) -> int:
        """The sum of all entries."""
        return sum(self.a)

    @property
    def support(self) -> Tuple[int, ...]:
        """The rays with a non-zero coefficient."""
        return tuple(idx for idx, e in enumerate(self.a) if e != 0)

    def is_binary(self) -> bool:
        """Indicate if every entry is 0 or 1."""
        return all(e in (0, 1) for e in self.a)

    def residual(self, fan: Fan) -> IntVector:
        """The vector sum a_rho eta_rho, which is zero for a genuine relation."""
        if len(self.a) != fan.ray_count:
            raise ValidationError(ToricError.Code.SHAPE_MISMATCH,
                                  'relation of length {0} for {1} rays'.format(
                                      len(self.a), fan.ray_count))
        return tuple(
            sum(coef * ray[i] for coef, ray in zip(self.a, fan.rays)) for i in range(fan.dim))

    def holds(self, fan: Fan) -> bool:
        """Check sum a_rho eta_rho = 0 exactly."""
        return not any(self.residual(fan))


@dataclass(frozen=True)
class ClassGroupDescription():
    """The class group Cl(X) as the cokernel of alpha: M -> Z^Sigma(1).

    Attributes:
        free_rank: The rank of the free part.
        torsion: The invariant factors greater than one.
        presentation: Column rho expresses [D_rho] in the chosen generators (torsion
                      generators first, reduced modulo their order, then free generators).
    """

    free_rank: int
    torsion: Tuple[int, ...]
    presentation: IntMatrix


def class_group(fan: Fan) -> ClassGroupDescription:
    """Compute the class group from the exact sequence M -> Z^Sigma(1) -> Cl(X) -> 0.

    Args:
        fan: A validated fan.

    Returns:
        The description of the cokernel of alpha.
    """
    count = fan.ray_count
    if count == 0:
        return ClassGroupDescription(0, (), IntMatrix(0, 0, ()))
    if fan.dim == 0:
        return ClassGroupDescription(count, (), IntMatrix.identity(count))

    # alpha(m) = (<m, eta_rho>)_rho, so its matrix has the rays as rows
    alpha = IntMatrix.from_rows(fan.rays, fan.dim)
    snf = smith_normal_form(alpha)
    diagonal = list(snf.diagonal) + [0] * (count - len(snf.diagonal))

    rows = []
    torsion = []
    for idx, order in enumerate(diagonal):
        if order > 1:
            torsion.append(order)
            rows.append([e % order for e in snf.U.row(idx)])
    for idx, order in enumerate(diagonal):
        if order == 0:
            rows.append(list(snf.U.row(idx)))

    free_rank = count - snf.rank
    get_divisor_logger().debug('Class group: free rank %d, torsion %s', free_rank, str(torsion))
    return ClassGroupDescription(free_rank, tuple(torsion), IntMatrix.from_rows(rows, count))


def intersect(kappa: KaehlerClass, rel: Union[Relation, Sequence[int]]) -> Fraction:
    """The intersection pairing D . R = sum kappa_rho a_rho.

    Args:
        kappa: The divisor class data.
        rel: The curve class.

    Returns:
        The exact intersection number.
    """
    coefs = rel.a if isinstance(rel, Relation) else tuple(rel)
    if len(coefs) != len(kappa.kappa):
        raise ValidationError(ToricError.Code.SHAPE_MISMATCH,
                              'class of length {0} against relation of length {1}'.format(
                                  len(kappa.kappa), len(coefs)))
    return sum((k * a for k, a in zip(kappa.kappa, coefs)), Fraction(0))


def wall_curve_relation(fan: Fan, wall: Wall) -> Relation:
    """The relation of the torus-invariant curve of a wall.

    The two rays opposite to the wall get coefficient one and the wall rays get the unique
    integers making sum a_rho eta_rho vanish.

    Args:
        fan: A smooth complete fan.
        wall: A wall of the fan.

    Returns:
        The wall relation.
    """
    first, second = wall.opposite_rays()
    target = tuple(-Fraction(a + b) for a, b in zip(fan.rays[first], fan.rays[second]))
    coeffs = solve_rational(fan.generators(wall.facet), target)
    if coeffs is None or any(c.denominator != 1 for c in coeffs):
        raise ComputationError(ToricError.Code.NOT_SMOOTH_CONE,
                               'no integral relation across wall {0}'.format(list(wall.facet)))

    coefs = [0] * fan.ray_count
    coefs[first] += 1
    coefs[second] += 1
    for idx, coef in zip(wall.facet, coeffs):
        coefs[idx] += int(coef)
    return Relation(tuple(coefs))


def _check_length(fan: Fan, kappa: KaehlerClass) -> None:
    if len(kappa) != fan.ray_count:
        raise ValidationError(ToricError.Code.SHAPE_MISMATCH,
                              'class of length {0} for {1} rays'.format(len(kappa),
                                                                        fan.ray_count))


def is_ample(fan: Fan, kappa: KaehlerClass) -> bool:
    """Decide ampleness by positivity on every wall curve.

    Args:
        fan: A smooth complete fan.
        kappa: The divisor class data.

    Returns:
        True if the class is ample.
    """
    require_smooth_complete(fan)
    _check_length(fan, kappa)
    return all(intersect(kappa, wall_curve_relation(fan, wall)) > 0 for wall in walls(fan))


def _span_basis(rays: Sequence[IntVector], dim: int) -> Tuple[IntVector, ...]:
    """A basis of the rational span of the rays: the standard basis when the rays span,
    otherwise rays picked greedily."""
    basis: Tuple[IntVector, ...] = ()
    for ray in rays:
        if rational_rank(basis + (ray, ), dim) > len(basis):
            basis += (ray, )
    if len(basis) == dim:
        return tuple(IntMatrix.identity(dim).row(i) for i in range(dim))
    return basis


def find_normalizing_character(fan: Fan, kappa: KaehlerClass) -> RationalVector:
    """Find m in M_Q with kappa_rho + <m, eta_rho> >= 0 for every ray.

    The admissible characters form the polyhedron {m : <m, eta_rho> >= -kappa_rho}. Only
    the part of m in the span of the rays matters, so m = sum t_j b_j is sought over a basis
    b of that span and the lexicographically least vertex in t is chosen. A non-negative
    class gets m = 0.

    Args:
        fan: A validated fan.
        kappa: The divisor class data.

    Returns:
        The character m.
    """
    # pylint: disable=import-outside-toplevel
    from .polytope import enumerate_vertices

    _check_length(fan, kappa)
    if kappa.is_nonnegative():
        return tuple(Fraction(0) for _ in range(fan.dim))

    basis = _span_basis(fan.rays, fan.dim)
    normals = [tuple(sum(b * e for b, e in zip(vec, ray)) for vec in basis) for ray in fan.rays]
    candidates = enumerate_vertices(normals, tuple(-k for k in kappa.kappa), len(basis))
    if not candidates:
        raise ComputationError(ToricError.Code.NOT_REPRESENTABLE,
                               'no non-negative representative: the momentum polytope is empty')
    coords = min(candidates)
    return tuple(
        sum((t * vec[i] for t, vec in zip(coords, basis)), Fraction(0))
        for i in range(fan.dim))


def normalize_kappa(fan: Fan, kappa: KaehlerClass) -> KaehlerClass:
    """Replace the class data by a non-negative representative of the same class.

    Args:
        fan: A validated fan.
        kappa: The divisor class data.

    Returns:
        kappa + alpha(m) with m from find_normalizing_character; kappa itself if it is
        already non-negative.
    """
    if kappa.is_nonnegative():
        _check_length(fan, kappa)
        return kappa
    shift = find_normalizing_character(fan, kappa)
    normalized = KaehlerClass(
        tuple(k + sum((m * e for m, e in zip(shift, ray)), Fraction(0))
              for k, ray in zip(kappa.kappa, fan.rays)))
    get_divisor_logger().info('Normalized the Kaehler class with m = %s',
                              ', '.join(str(m) for m in shift))
    return normalized
