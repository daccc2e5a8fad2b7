"""
Curve classes as integer relations among ray generators: the minimal non-negative relations,
the bound gamma and the bound Lambda.
"""
from dataclasses import dataclass
from fractions import Fraction
from logging import Logger
from typing import Any, Dict, List, Optional, Tuple

from .config import default_config
from .divisor import KaehlerClass, Relation, intersect
from .errors import ComputationError, ToricError, ValidationError
from .fan import Fan, require_smooth_complete
from .logger import get_default_logger
from .solver.algorithmfactory import AlgorithmFactory
from .solver.exhaustive import ExhaustiveAlgorithm
from .solver.explorer import Explorer

__all__ = [
    'Relation', 'GammaResult', 'search_minimal_relations', 'minimal_nonneg_relations', 'gamma',
    'lambda_lu', 'degree_capped_relations', 'gamma_by_brute_force', 'lambda_discrepancies'
]


def get_relations_logger() -> Logger:
    """Attach the logger of this module"""
    return get_default_logger('Relations')


@dataclass(frozen=True)
class GammaResult():
    """The minimum of kappa . a over the non-zero non-negative relations.

    Attributes:
        value: The minimum.
        minimizer: The lexicographically smallest minimal relation attaining it.
        attained_by_binary: Whether a minimizer with all entries in {0, 1} exists.
        complete: Whether the relation search covered every minimal relation. Otherwise the
            value is only an upper bound of gamma.
    """

    value: Fraction
    minimizer: Relation
    attained_by_binary: bool
    complete: bool = True


def _solver_config(config: Optional[Dict[str, Any]]) -> Dict[str, Any]:
    return (config if config is not None else default_config())['solver']['algorithm']


def _check_kappa(fan: Fan, kappa: KaehlerClass) -> None:
    if len(kappa) != fan.ray_count:
        raise ValidationError(ToricError.Code.SHAPE_MISMATCH,
                              'class of length {0} for {1} rays'.format(len(kappa),
                                                                        fan.ray_count))
    negative = [idx for idx, k in enumerate(kappa.kappa) if k < 0]
    if negative:
        raise ValidationError(
            ToricError.Code.NEGATIVE_KAPPA,
            'kappa is negative at rays {0}; normalize it first'.format(negative))


def search_minimal_relations(
        fan: Fan, config: Optional[Dict[str, Any]] = None) -> Tuple[List[Relation], bool]:
    """Run the configured relation search and keep the componentwise-minimal relations.

    Args:
        fan: A validated fan.
        config: The full configuration; the default one if None.

    Returns:
        The minimal relations in lexicographic order, and whether the search covered every
        minimal relation.
    """
    log = get_relations_logger()
    algo = AlgorithmFactory.make(_solver_config(config), fan.rays)
    found = Explorer(algo).run()

    # The exhaustive algorithm returns every relation in its box
    minimal = [
        point for point in found
        if not any(other != point and all(a >= b for a, b in zip(point, other))
                   for other in found)
    ]
    log.debug('%d minimal relations', len(minimal))
    if not algo.complete:
        log.warning('SEARCH_CAPPED: the relation search was capped, minimal relations may be '
                    'missing')
    return [Relation(point) for point in sorted(minimal)], algo.complete


def minimal_nonneg_relations(fan: Fan, config: Optional[Dict[str, Any]] = None) -> List[Relation]:
    """Compute the componentwise-minimal non-zero non-negative relations.

    Args:
        fan: A validated fan.
        config: The full configuration; the default one if None.

    Returns:
        The minimal relations in lexicographic order.
    """
    return search_minimal_relations(fan, config)[0]


def gamma(fan: Fan, kappa: KaehlerClass, config: Optional[Dict[str, Any]] = None) -> GammaResult:
    """Compute gamma(X, omega) = min sum kappa_rho a_rho over non-zero non-negative relations.

    The objective is monotone on non-negative vectors when kappa >= 0, so the minimum is
    attained at a minimal relation.

    Args:
        fan: A smooth complete fan.
        kappa: A non-negative Kaehler class.
        config: The full configuration; the default one if None.

    Returns:
        The minimum, the lexicographically smallest minimizer and the binary flag.
    """
    require_smooth_complete(fan)
    _check_kappa(fan, kappa)

    rels, complete = search_minimal_relations(fan, config)
    if not rels:
        raise ComputationError(ToricError.Code.NO_RELATION,
                               'the rays admit no non-negative relation')

    values = [(intersect(kappa, rel), rel) for rel in rels]
    value = min(val for val, _ in values)
    minimizers = [rel for val, rel in values if val == value]
    minimizer = min(minimizers, key=lambda rel: rel.a)
    binary = any(rel.is_binary() for rel in minimizers)
    get_relations_logger().info('gamma = %s attained by %s', str(value), str(minimizer.a))
    return GammaResult(value, minimizer, binary, complete)


def degree_capped_relations(fan: Fan, config: Optional[Dict[str, Any]] = None) -> List[Relation]:
    """The finite set S of non-negative relations with total degree between 1 and n + 1.

    Args:
        fan: A validated fan.
        config: The full configuration; the default one if None.

    Returns:
        All relations of S in lexicographic order.
    """
    cap = fan.dim + 1
    batch_size = _solver_config(config)['exhaustive']['batch-size']
    algo = ExhaustiveAlgorithm(fan.rays,
                               bound=cap,
                               batch_size=batch_size,
                               min_degree=1,
                               max_degree=cap)
    return [Relation(point) for point in Explorer(algo).run()]


def lambda_lu(fan: Fan, kappa: KaehlerClass, config: Optional[Dict[str, Any]] = None) -> Fraction:
    """Compute Lambda(X, omega) = max sum kappa_rho a_rho over S.

    Args:
        fan: A smooth complete fan.
        kappa: A non-negative Kaehler class.
        config: The full configuration; the default one if None.

    Returns:
        The maximum.
    """
    require_smooth_complete(fan)
    _check_kappa(fan, kappa)

    rels = degree_capped_relations(fan, config)
    if not rels:
        raise ComputationError(ToricError.Code.NO_RELATION,
                               'no relation of total degree at most {0}'.format(fan.dim + 1))
    return max(intersect(kappa, rel) for rel in rels)


def gamma_by_brute_force(fan: Fan,
                         kappa: KaehlerClass,
                         bound: int,
                         config: Optional[Dict[str, Any]] = None) -> Fraction:
    """Minimize kappa . a over every non-zero non-negative relation with entries <= bound.

    Args:
        fan: A smooth complete fan.
        kappa: A non-negative Kaehler class.
        bound: The largest entry to enumerate.
        config: The full configuration; the default one if None.

    Returns:
        The minimum in the box.
    """
    _check_kappa(fan, kappa)
    batch_size = _solver_config(config)['exhaustive']['batch-size']
    found = Explorer(ExhaustiveAlgorithm(fan.rays, bound=bound, batch_size=batch_size)).run()
    if not found:
        raise ComputationError(ToricError.Code.NO_RELATION,
                               'no relation with entries at most {0}'.format(bound))
    return min(intersect(kappa, point) for point in found)


def lambda_discrepancies(fan: Fan, config: Optional[Dict[str, Any]] = None) -> List[Relation]:
    """List the minimal relations whose total degree exceeds n + 1, hence escape S.

    Args:
        fan: A validated fan.
        config: The full configuration; the default one if None.

    Returns:
        The escaping minimal relations.
    """
    return [
        rel for rel in minimal_nonneg_relations(fan, config) if rel.total_degree > fan.dim + 1
    ]
