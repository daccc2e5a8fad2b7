"""
The fan document: a strict JSON description of a fan with an optional Kaehler class.

    {
        "name": "H2",
        "dim": 2,
        "rays": [[-1, 2], [0, 1], [1, 0], [0, -1]],
        "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
        "kappa": ["0", "0", "1", "1"]
    }

Kappa entries are integers, decimals or "p/q" strings, all parsed exactly.
"""
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from .divisor import KaehlerClass
from .errors import ToricError, ValidationError
from .fan import Fan
from .lattice import IntVector
from .logger import get_default_logger

# Field name -> required
DOCUMENT_FIELDS = {'name': False, 'dim': True, 'rays': True, 'max_cones': True, 'kappa': False}


@dataclass(frozen=True)
class FanDocument():
    """A parsed fan document.

    Attributes:
        fan: The fan, already checked against its invariants.
        kappa: The Kaehler class, if present.
        name: The name, if present.
    """

    fan: Fan
    kappa: Optional[KaehlerClass] = None
    name: Optional[str] = None

    @property
    def dim(self) -> int:
        """The lattice rank."""
        return self.fan.dim

    @property
    def rays(self) -> List[IntVector]:
        """The rays in input order."""
        return list(self.fan.rays)

    @property
    def max_cones(self) -> List[List[int]]:
        """The maximal cones as index lists."""
        return [list(cone) for cone in self.fan.max_cones]


def _reject_constant(name: str) -> Any:
    raise ValidationError(ToricError.Code.BAD_NUMBER, '{0} is not a number'.format(name))


def _unique_keys(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    obj: Dict[str, Any] = {}
    for key, value in pairs:
        if key in obj:
            raise ValidationError(ToricError.Code.BAD_DOCUMENT,
                                  'duplicate field "{0}"'.format(key))
        obj[key] = value
    return obj


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def parse_rational(value: Any) -> Fraction:
    """Parse an exact rational from an integer, a decimal or a "p/q" string.

    Args:
        value: The decoded JSON value.

    Returns:
        The rational.
    """
    if _is_int(value) or isinstance(value, Fraction):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ValidationError(ToricError.Code.BAD_NUMBER, 'malformed rational "{0}"'.format(value))


def _int_list(value: Any, what: str, code: ToricError.Code) -> List[int]:
    if not isinstance(value, list):
        raise ValidationError(ToricError.Code.BAD_DOCUMENT, '{0} must be a list'.format(what))
    for elem in value:
        if not _is_int(elem):
            raise ValidationError(code, '{0} has a non-integer entry "{1}"'.format(what, elem))
    return value


def parse_fan_file(data: Union[bytes, str]) -> FanDocument:
    """Parse a fan document strictly.

    Args:
        data: The UTF-8 encoded document.

    Returns:
        The parsed document.
    """
    log = get_default_logger('Document')

    try:
        text = data.decode('utf-8') if isinstance(data, bytes) else data
    except UnicodeDecodeError as err:
        raise ValidationError(ToricError.Code.BAD_DOCUMENT, 'not UTF-8: {0}'.format(err))

    try:
        # Decimals become exact fractions, never floats
        raw = json.loads(text,
                         parse_float=Fraction,
                         parse_constant=_reject_constant,
                         object_pairs_hook=_unique_keys)
    except ValueError as err:
        raise ValidationError(ToricError.Code.BAD_DOCUMENT, 'not JSON: {0}'.format(err))
    if not isinstance(raw, dict):
        raise ValidationError(ToricError.Code.BAD_DOCUMENT, 'the document must be an object')

    error = 0
    for key in raw:
        if key not in DOCUMENT_FIELDS:
            log.error('Unrecognized field: %s', key)
            error += 1
    for key, required in DOCUMENT_FIELDS.items():
        if required and key not in raw:
            log.error('Missing "%s" in the document which is required', key)
            error += 1
    if error > 0:
        raise ValidationError(ToricError.Code.BAD_DOCUMENT,
                              'the document has {0} field error(s)'.format(error))

    dim = raw['dim']
    if not _is_int(dim) or dim < 0:
        raise ValidationError(ToricError.Code.BAD_DOCUMENT,
                              'dim must be a non-negative integer')

    if not isinstance(raw['rays'], list):
        raise ValidationError(ToricError.Code.BAD_DOCUMENT, 'rays must be a list')
    rays = [_int_list(ray, 'ray {0}'.format(idx), ToricError.Code.BAD_NUMBER)
            for idx, ray in enumerate(raw['rays'])]

    if not isinstance(raw['max_cones'], list):
        raise ValidationError(ToricError.Code.BAD_DOCUMENT, 'max_cones must be a list')
    cones = [_int_list(cone, 'cone {0}'.format(idx), ToricError.Code.INVALID_CONE)
             for idx, cone in enumerate(raw['max_cones'])]

    fan = Fan.build(dim, rays, cones)

    kappa = None
    if raw.get('kappa') is not None:
        if not isinstance(raw['kappa'], list):
            raise ValidationError(ToricError.Code.BAD_DOCUMENT, 'kappa must be a list')
        kappa = KaehlerClass(tuple(parse_rational(val) for val in raw['kappa']))
        if len(kappa) != fan.ray_count:
            raise ValidationError(
                ToricError.Code.SHAPE_MISMATCH,
                'kappa has {0} entries for {1} rays'.format(len(kappa), fan.ray_count))

    name = raw.get('name')
    if name is not None and not isinstance(name, str):
        raise ValidationError(ToricError.Code.BAD_DOCUMENT, 'name must be a string')

    log.debug('Parsed fan "%s" with %d rays', name or '', fan.ray_count)
    return FanDocument(fan, kappa, name)


def load_fan_file(path: str) -> FanDocument:
    """Read and parse a fan document from a file."""
    with open(path, 'rb') as filep:
        return parse_fan_file(filep.read())


def dump_fan_document(doc: FanDocument) -> str:
    """Write a document back in the fan document format with exact "p/q" kappa entries."""
    raw: Dict[str, Any] = {}
    if doc.name is not None:
        raw['name'] = doc.name
    raw['dim'] = doc.dim
    raw['rays'] = [list(ray) for ray in doc.rays]
    raw['max_cones'] = doc.max_cones
    if doc.kappa is not None:
        raw['kappa'] = ['{0}/{1}'.format(k.numerator, k.denominator) for k in doc.kappa.kappa]
    return json.dumps(raw, indent=2)
