"""
Primitive collections and relations, the Fano test, minimal rational curve families and
free-curve certificates.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from .divisor import KaehlerClass, Relation, intersect
from .errors import ComputationError, ToricError, ValidationError
from .fan import Cone, Fan, locate_cone, require_smooth_complete
from .logger import get_default_logger


@dataclass(frozen=True)
class PrimitiveCollection():
    """A minimal set of rays that does not generate a cone.

    Attributes:
        indices: The sorted ray indices.
    """

    indices: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.indices)

    def indicator(self, count: int) -> Relation:
        """The 0/1 vector of the collection among count rays."""
        return Relation(tuple(int(idx in self.indices) for idx in range(count)))


@dataclass(frozen=True)
class PrimitiveRelation():
    """The unique equation x_1 + ... + x_k = b_1 y_1 + ... + b_m y_m of a collection.

    Attributes:
        collection: The primitive collection x_1, ..., x_k.
        sigma: The cone containing the ray sum in its relative interior, possibly the zero cone.
        coefficients: The positive integers b_i, one per generator of sigma.
        degree: k - sum b_i.
    """

    collection: PrimitiveCollection
    sigma: Cone
    coefficients: Tuple[int, ...]
    degree: int

    def relation(self, count: int) -> Relation:
        """The signed relation sum x_i - sum b_i y_i among count rays."""
        coefs = [0] * count
        for idx in self.collection.indices:
            coefs[idx] += 1
        for idx, coef in zip(self.sigma, self.coefficients):
            coefs[idx] -= coef
        return Relation(tuple(coefs))


class CurveFamily(NamedTuple):
    """A minimal rational curve family given by a zero-sum primitive collection."""
    collection: PrimitiveCollection
    degree: int


@dataclass(frozen=True)
class CurveCertificate():
    """The exponent bookkeeping of a rational curve t -> prod lambda_eta(t - c)^a.

    Attributes:
        relation: The non-negative relation.
        markers: The distinct parameter c of every ray in the support.
        exponents: Per lattice coordinate, the (c, a_rho * eta_rho_i) pairs of the support.
        exponent_sums: Per lattice coordinate, the total exponent (zero at infinity).
        multiplicities: Per ray in the support, the intersection D_rho . C read off the
                        vanishing orders.
        symplectic_area: kappa . relation when a class is attached.
    """

    relation: Relation
    markers: Tuple[Tuple[int, Fraction], ...]
    exponents: Tuple[Tuple[Tuple[Fraction, int], ...], ...]
    exponent_sums: Tuple[int, ...]
    multiplicities: Tuple[Tuple[int, int], ...]
    symplectic_area: Optional[Fraction] = None


def primitive_collections(fan: Fan) -> List[PrimitiveCollection]:
    """Enumerate the minimal non-faces of the simplicial complex of cones.

    A candidate of size k is generated once, from its (k-1)-face without its largest index.

    Args:
        fan: A simplicial complete fan.

    Returns:
        The primitive collections in lexicographic order.
    """
    log = get_default_logger('PrimColl')
    faces = fan.faces
    max_size = max((len(cone) for cone in fan.max_cones), default=0) + 1

    result: List[Tuple[int, ...]] = []
    layer = [face for face in faces if not face]
    for size in range(1, max_size + 1):
        for face in layer:
            start = max(face) + 1 if face else 0
            for idx in range(start, fan.ray_count):
                cand = face | {idx}
                if cand in faces:
                    continue
                if all(cand - {elem} in faces for elem in cand):
                    result.append(tuple(sorted(cand)))
        layer = [face for face in faces if len(face) == size]

    log.debug('%d primitive collections', len(result))
    return [PrimitiveCollection(indices) for indices in sorted(result)]


def _check_collection(fan: Fan, coll: PrimitiveCollection) -> None:
    cand = frozenset(coll.indices)
    if not coll.indices or fan.is_face(coll.indices) or not all(
            cand - {elem} in fan.faces for elem in cand):
        raise ValidationError(ToricError.Code.INVALID_CONE,
                              '{0} is not a primitive collection'.format(list(coll.indices)))


def primitive_relation(fan: Fan, coll: PrimitiveCollection) -> PrimitiveRelation:
    """Compute the primitive relation and degree of a primitive collection.

    Args:
        fan: A simplicial complete fan.
        coll: A primitive collection of the fan.

    Returns:
        The primitive relation.
    """
    _check_collection(fan, coll)
    total = [sum(fan.rays[idx][i] for idx in coll.indices) for i in range(fan.dim)]
    loc = locate_cone(fan, total)
    if any(c.denominator != 1 for c in loc.coefficients):
        raise ComputationError(
            ToricError.Code.NOT_SMOOTH_CONE, 'ray sum of {0} has coefficients {1}'.format(
                list(coll.indices), ', '.join(str(c) for c in loc.coefficients)))

    coefficients = tuple(int(c) for c in loc.coefficients)
    return PrimitiveRelation(coll, loc.cone, coefficients, len(coll) - sum(coefficients))


def primitive_relations(fan: Fan) -> List[PrimitiveRelation]:
    """The primitive relation of every primitive collection."""
    return [primitive_relation(fan, coll) for coll in primitive_collections(fan)]


def is_fano(fan: Fan) -> bool:
    """Decide the Fano property: every primitive relation has positive degree.

    Args:
        fan: A smooth complete fan.

    Returns:
        True if the toric variety is Fano.
    """
    require_smooth_complete(fan)
    return all(prim.degree > 0 for prim in primitive_relations(fan))


def minimal_curve_families(fan: Fan) -> List[CurveFamily]:
    """List the primitive collections whose rays sum to zero, with their degree.

    Args:
        fan: A smooth complete fan.

    Returns:
        The families in the order of the primitive collections.
    """
    require_smooth_complete(fan)
    families = [
        CurveFamily(prim.collection, prim.degree) for prim in primitive_relations(fan)
        if not prim.sigma
    ]
    if not families:
        raise ComputationError(ToricError.Code.INTERNAL_CONTRADICTION,
                               'a smooth complete fan without minimal rational curve family')
    return families


def free_curve_certificate(fan: Fan,
                           rel: Union[Relation, Sequence[int]],
                           kappa: Optional[KaehlerClass] = None,
                           markers: Optional[Dict[int, Union[int, str, Fraction]]] = None
                           ) -> CurveCertificate:
    """Build and verify the exponent table of the rational curve of a non-negative relation.

    Args:
        fan: A validated fan.
        rel: A non-zero non-negative relation.
        kappa: The Kaehler class for the symplectic area, if any.
        markers: The parameter c of every ray with a positive coefficient; 0, 1, 2, ... in
                 ray order if None.

    Returns:
        The verified certificate.
    """
    rel = rel if isinstance(rel, Relation) else Relation.of(rel)
    if len(rel.a) != fan.ray_count:
        raise ValidationError(ToricError.Code.SHAPE_MISMATCH,
                              'relation of length {0} for {1} rays'.format(
                                  len(rel.a), fan.ray_count))
    if not any(rel.a):
        raise ValidationError(ToricError.Code.ZERO_RELATION, 'the relation is zero')
    if any(e < 0 for e in rel.a):
        raise ValidationError(ToricError.Code.NOT_A_RELATION,
                              'relation {0} has negative entries'.format(list(rel.a)))

    support = rel.support
    if markers is None:
        params = {idx: Fraction(pos) for pos, idx in enumerate(support)}
    else:
        if sorted(markers) != list(support):
            raise ValidationError(ToricError.Code.SHAPE_MISMATCH,
                                  'markers must cover exactly the rays {0}'.format(list(support)))
        params = {idx: Fraction(val) for idx, val in markers.items()}
    if len(set(params.values())) != len(params):
        raise ValidationError(ToricError.Code.DUPLICATE_MARKER, 'marker values must be distinct')

    exponents = tuple(
        tuple((params[idx], rel.a[idx] * fan.rays[idx][i]) for idx in support)
        for i in range(fan.dim))
    sums = tuple(sum(exp for _, exp in coord) for coord in exponents)
    if any(sums):
        raise ValidationError(
            ToricError.Code.NOT_A_RELATION,
            'exponent sums {0} do not vanish: {1} is not a relation'.format(
                list(sums), list(rel.a)))

    multiplicities = []
    for idx in support:
        order = [exp for coord in exponents for c, exp in coord if c == params[idx]]
        mult = reduce(gcd, order, 0)
        if mult != rel.a[idx]:
            raise ComputationError(
                ToricError.Code.INTERNAL_CONTRADICTION,
                'vanishing order {0} at ray {1} differs from {2}'.format(mult, idx, rel.a[idx]))
        multiplicities.append((idx, mult))

    area = intersect(kappa, rel) if kappa is not None else None
    return CurveCertificate(rel, tuple(sorted(params.items())), exponents, sums,
                            tuple(multiplicities), area)
