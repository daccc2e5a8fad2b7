"""
Seshadri-constant upper bounds from gamma and from minimal curve degrees.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Union

from .divisor import KaehlerClass, intersect, is_ample
from .errors import ToricError, ValidationError
from .fan import Fan
from .primcoll import minimal_curve_families
from .relations import gamma

CAVEAT = ('upper bound on the Seshadri constant at every point x; the line bundle is '
          'assumed very ample, which ampleness implies on smooth toric varieties')


@dataclass(frozen=True)
class SeshadriBound():
    """An upper bound of the Seshadri constant.

    Attributes:
        upper: The bound.
        source: 'gamma' or 'minimal_curve_list'.
        caveat: Under which hypotheses the bound holds.
    """

    upper: Fraction
    source: str
    caveat: str = CAVEAT


def seshadri_bound_toric(fan: Fan,
                         kappa: KaehlerClass,
                         config: Optional[Dict[str, Any]] = None) -> SeshadriBound:
    """Bound the Seshadri constant of an ample class by gamma.

    Args:
        fan: A smooth complete fan.
        kappa: A non-negative ample class.
        config: The full configuration; the default one if None.

    Returns:
        The bound with source 'gamma'.
    """
    if not is_ample(fan, kappa):
        raise ValidationError(ToricError.Code.NOT_AMPLE, 'the class is not ample')
    return SeshadriBound(gamma(fan, kappa, config).value, 'gamma')


def seshadri_bound_minimal_curves(
        degrees: Sequence[Union[int, str, Fraction]]) -> SeshadriBound:
    """Bound the Seshadri constant by the least degree on a minimal curve.

    Args:
        degrees: The positive degrees L . C of minimal curves.

    Returns:
        The bound with source 'minimal_curve_list'.
    """
    if not degrees:
        raise ValidationError(ToricError.Code.NO_CURVES, 'no minimal curve degree given')
    values = [Fraction(deg) for deg in degrees]
    bad = [str(val) for val in values if val <= 0]
    if bad:
        raise ValidationError(ToricError.Code.INVALID_DEGREE,
                              'degrees must be positive, got {0}'.format(', '.join(bad)))
    return SeshadriBound(min(values), 'minimal_curve_list')


def minimal_curve_degrees(fan: Fan, kappa: KaehlerClass) -> List[Fraction]:
    """The degrees kappa . C of the minimal rational curve families.

    Args:
        fan: A smooth complete fan.
        kappa: The Kaehler class.

    Returns:
        One degree per family, in the order of minimal_curve_families.
    """
    return [
        intersect(kappa, family.collection.indicator(fan.ray_count))
        for family in minimal_curve_families(fan)
    ]
