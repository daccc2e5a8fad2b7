"""
The bound report: orchestration of every computation, machine-readable serialization and
human-readable tables.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

import jsonpickle
import jsonpickle.handlers
import texttable as tt

from .config import default_config
from .divisor import class_group, find_normalizing_character, is_ample, normalize_kappa
from .document import FanDocument
from .errors import ComputationError, ToricError, ValidationError
from .fan import validate_fan
from .logger import get_default_logger
from .polytope import lattice_width, momentum_polytope, width_along
from .primcoll import minimal_curve_families, primitive_relations
from .relations import gamma, lambda_discrepancies, lambda_lu, minimal_nonneg_relations
from .seshadri import (CAVEAT, minimal_curve_degrees, seshadri_bound_minimal_curves,
                       seshadri_bound_toric)


class FractionHandler(jsonpickle.handlers.BaseHandler):
    """Serialize fractions as exact "p/q" strings."""

    def flatten(self, obj: Fraction, data: Dict[str, Any]) -> Dict[str, Any]:
        data['value'] = '{0}/{1}'.format(obj.numerator, obj.denominator)
        return data

    def restore(self, obj: Dict[str, Any]) -> Fraction:
        return Fraction(obj['value'])


jsonpickle.handlers.register(Fraction, FractionHandler)


class WarningCode(Enum):
    """The codes of report warnings."""
    LAMBDA_DEGREE_CAP = 'LAMBDA_DEGREE_CAP'
    NOT_AMPLE = 'NOT_AMPLE'
    NORMALIZED = 'NORMALIZED'
    NOT_BINARY = 'NOT_BINARY'
    CHAIN_UNDECIDED = 'CHAIN_UNDECIDED'
    WIDTH_UNCERTIFIED = 'WIDTH_UNCERTIFIED'
    SEARCH_CAPPED = 'SEARCH_CAPPED'


@dataclass
class ReportWarning():
    """A structured warning."""
    code: str
    text: str


@dataclass
class PrimitiveRelationEntry():
    """A primitive relation sum of collection = sum coefficients * sigma."""
    collection: List[int]
    sigma: List[int]
    coefficients: List[int]
    degree: int


@dataclass
class CurveFamilyEntry():
    """A minimal rational curve family and its degree."""
    collection: List[int]
    degree: int


@dataclass
class DirectionalWidth():
    """The width of the momentum polytope along one direction."""
    direction: List[int]
    value: Fraction


@dataclass
class BoundReport():
    """All invariants and bounds computed for one fan document."""

    name: str
    simplicial: bool
    smooth: bool
    complete: bool
    pure: bool
    kappa: List[Fraction]
    normalizing_character: List[Fraction]
    class_group_free_rank: int
    class_group_torsion: List[int]
    ample: bool
    fano: bool
    primitive_relations: List[PrimitiveRelationEntry]
    minimal_curve_families: List[CurveFamilyEntry]
    minimal_relations: List[List[int]]
    gamma: Fraction
    gamma_minimizer: List[int]
    attained_by_binary: bool
    lambda_lu: Fraction
    vertices: List[List[Fraction]]
    lattice_width: Fraction
    width_direction: List[int]
    width_certified: bool
    width_search_bound: int
    directional_widths: List[DirectionalWidth]
    gromov_width_upper: Fraction
    seshadri_upper: Optional[Fraction]
    seshadri_minimal_curve_upper: Optional[Fraction]
    seshadri_caveat: str
    warnings: List[ReportWarning] = field(default_factory=list)

    def warning_codes(self) -> List[str]:
        """The codes of all warnings."""
        return [warn.code for warn in self.warnings]


def run_report(doc: FanDocument, config: Optional[Dict[str, Any]] = None) -> BoundReport:
    """Compute every invariant and bound of a fan document.

    Args:
        doc: The parsed document, with a Kaehler class.
        config: The full configuration; the default one if None.

    Returns:
        The report.
    """
    log = get_default_logger('Report')
    config = config if config is not None else default_config()
    fan = doc.fan
    warnings: List[ReportWarning] = []

    flags = validate_fan(fan)
    if not flags.smooth_complete:
        raise ValidationError(
            ToricError.Code.NOT_SMOOTH_COMPLETE,
            'fan is not smooth and complete (smooth={0}, complete={1})'.format(
                flags.smooth, flags.complete))
    if doc.kappa is None:
        raise ValidationError(ToricError.Code.BAD_DOCUMENT, 'the document has no kappa')

    kappa = doc.kappa
    shift = [Fraction(0)] * fan.dim
    if config['kappa']['normalize'] and not kappa.is_nonnegative():
        shift = list(find_normalizing_character(fan, kappa))
        kappa = normalize_kappa(fan, kappa)
        warnings.append(
            ReportWarning(
                WarningCode.NORMALIZED.value,
                'kappa replaced by a non-negative representative with m = ({0})'.format(
                    ', '.join(str(m) for m in shift))))

    log.info('Computing the invariants of %s', doc.name or 'the fan')
    group = class_group(fan)
    prims = primitive_relations(fan)
    families = minimal_curve_families(fan)
    ample = is_ample(fan, kappa)

    gamma_result = gamma(fan, kappa, config)
    lam = lambda_lu(fan, kappa, config)
    escaping = lambda_discrepancies(fan, config)
    if escaping:
        warnings.append(
            ReportWarning(
                WarningCode.LAMBDA_DEGREE_CAP.value,
                'minimal relations of total degree above {0} are outside the set defining '
                'Lambda: {1}'.format(fan.dim + 1, '; '.join(str(list(rel.a))
                                                             for rel in escaping))))
    if not gamma_result.complete:
        warnings.append(
            ReportWarning(WarningCode.SEARCH_CAPPED.value,
                          'the relation search was capped: gamma is only an upper bound'))
    if not gamma_result.attained_by_binary:
        warnings.append(
            ReportWarning(WarningCode.NOT_BINARY.value,
                          'no minimizer of gamma has all entries in {0, 1}'))

    poly = momentum_polytope(fan, kappa)
    width = lattice_width(poly,
                          search_bound=config['width']['search-bound'] or None,
                          certificate=gamma_result.value if gamma_result.complete else None,
                          max_doublings=config['width']['max-doublings'])
    if width.value != gamma_result.value:
        if ample and gamma_result.complete:
            raise ComputationError(
                ToricError.Code.INTERNAL_CONTRADICTION,
                'lattice width {0} differs from gamma {1}'.format(width.value,
                                                                 gamma_result.value))
        warnings.append(
            ReportWarning(
                WarningCode.WIDTH_UNCERTIFIED.value,
                'lattice width {0} differs from gamma {1} for a class that is not ample or after '
                'a capped relation search'.format(
                    width.value, gamma_result.value)))

    directions = [tuple(int(i == j) for j in range(fan.dim)) for i in range(fan.dim)]
    if width.direction and width.direction not in directions:
        directions.append(width.direction)
    dir_widths = [DirectionalWidth(list(u), width_along(poly, u)) for u in directions]

    seshadri_upper = None
    curve_upper = None
    if ample:
        seshadri_upper = seshadri_bound_toric(fan, kappa, config).upper
        curve_upper = seshadri_bound_minimal_curves(minimal_curve_degrees(fan, kappa)).upper
        warnings.append(
            ReportWarning(
                WarningCode.CHAIN_UNDECIDED.value,
                'the equality criterion of the Seshadri chain is not decidable here; only '
                'the upper side |pi(P)| is reported'))
    else:
        warnings.append(
            ReportWarning(WarningCode.NOT_AMPLE.value,
                          'kappa is not ample: the bounds assume a Kaehler class and the '
                          'Seshadri bound is omitted'))

    for warn in warnings:
        log.warning('%s: %s', warn.code, warn.text)

    return BoundReport(
        name=doc.name or '',
        simplicial=flags.simplicial,
        smooth=flags.smooth,
        complete=flags.complete,
        pure=flags.pure,
        kappa=list(kappa.kappa),
        normalizing_character=shift,
        class_group_free_rank=group.free_rank,
        class_group_torsion=list(group.torsion),
        ample=ample,
        fano=all(prim.degree > 0 for prim in prims),
        primitive_relations=[
            PrimitiveRelationEntry(list(prim.collection.indices), list(prim.sigma),
                                   list(prim.coefficients), prim.degree) for prim in prims
        ],
        minimal_curve_families=[
            CurveFamilyEntry(list(fam.collection.indices), fam.degree) for fam in families
        ],
        minimal_relations=[list(rel.a) for rel in minimal_nonneg_relations(fan, config)],
        gamma=gamma_result.value,
        gamma_minimizer=list(gamma_result.minimizer.a),
        attained_by_binary=gamma_result.attained_by_binary,
        lambda_lu=lam,
        vertices=[list(vert) for vert in poly.vertices],
        lattice_width=width.value,
        width_direction=list(width.direction),
        width_certified=width.certified,
        width_search_bound=width.search_bound,
        directional_widths=dir_widths,
        gromov_width_upper=gamma_result.value,
        seshadri_upper=seshadri_upper,
        seshadri_minimal_curve_upper=curve_upper,
        seshadri_caveat=CAVEAT,
        warnings=warnings)


def encode_json(obj: Any) -> str:
    """Serialize any result object deterministically with exact fractions."""
    return jsonpickle.encode(obj, make_refs=False, indent=2)


def serialize_report(report: BoundReport) -> str:
    """Serialize a report to its machine-readable form."""
    return encode_json(report)


def parse_report(text: str) -> BoundReport:
    """Restore a report from its machine-readable form."""
    report = jsonpickle.decode(text)
    if not isinstance(report, BoundReport):
        raise ValidationError(ToricError.Code.BAD_DOCUMENT, 'not a serialized bound report')
    return report


def fmt(value: Any) -> str:
    """Format fractions, vectors and flags for the tables."""
    if isinstance(value, (list, tuple)):
        return '(' + ', '.join(fmt(elem) for elem in value) + ')'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if value is None:
        return '----'
    return str(value)


class Reporter():
    """Render a bound report as text tables.

    Attributes:
        report: The report to be rendered.
    """

    def __init__(self, report: BoundReport):
        self.report = report

    def report_validation(self) -> str:
        """The fan and class summary."""
        rpt = self.report
        tbl = tt.Texttable()
        tbl.header(['Property', 'Value'])
        tbl.set_cols_dtype(['t', 't'])
        tbl.add_row(['Fan', rpt.name or '----'])
        tbl.add_row(['Simplicial', fmt(rpt.simplicial)])
        tbl.add_row(['Smooth', fmt(rpt.smooth)])
        tbl.add_row(['Complete', fmt(rpt.complete)])
        tbl.add_row(['Pure', fmt(rpt.pure)])
        tbl.add_row(['Class group', 'Z^{0}{1}'.format(
            rpt.class_group_free_rank,
            ''.join(' + Z/{0}'.format(order) for order in rpt.class_group_torsion))])
        tbl.add_row(['Kappa', fmt(rpt.kappa)])
        tbl.add_row(['Normalizing character', fmt(rpt.normalizing_character)])
        tbl.add_row(['Ample', fmt(rpt.ample)])
        tbl.add_row(['Fano', fmt(rpt.fano)])
        return tbl.draw()

    def report_relations(self) -> str:
        """The primitive relations and the minimal curve families."""
        tbl = tt.Texttable()
        tbl.header(['Collection', 'Cone', 'Coefficients', 'Degree', 'Minimal family'])
        tbl.set_cols_dtype(['t'] * 5)
        families = [fam.collection for fam in self.report.minimal_curve_families]
        for prim in self.report.primitive_relations:
            tbl.add_row([
                fmt(prim.collection),
                fmt(prim.sigma),
                fmt(prim.coefficients),
                str(prim.degree),
                fmt(prim.collection in families)
            ])
        return tbl.draw()

    def report_polytope(self) -> str:
        """The momentum polytope and its widths."""
        rpt = self.report
        tbl = tt.Texttable()
        tbl.header(['Direction', 'Width'])
        tbl.set_cols_dtype(['t', 't'])
        for entry in rpt.directional_widths:
            tbl.add_row([fmt(entry.direction), str(entry.value)])
        tbl.add_row(['lattice width {0}'.format(fmt(rpt.width_direction)),
                     '{0} ({1})'.format(rpt.lattice_width,
                                        'certified' if rpt.width_certified else 'uncertified')])
        return 'Vertices: {0}\n{1}'.format(', '.join(fmt(v) for v in rpt.vertices), tbl.draw())

    def report_bounds(self) -> str:
        """The bounds."""
        rpt = self.report
        tbl = tt.Texttable()
        tbl.header(['Bound', 'Value'])
        tbl.set_cols_dtype(['t', 't'])
        tbl.add_row(['gamma', '{0} at {1}'.format(rpt.gamma, fmt(rpt.gamma_minimizer))])
        tbl.add_row(['Attained by a 0/1 relation', fmt(rpt.attained_by_binary)])
        tbl.add_row(['Lambda', str(rpt.lambda_lu)])
        tbl.add_row(['Gromov width <=', str(rpt.gromov_width_upper)])
        tbl.add_row(['Seshadri constant <=', fmt(rpt.seshadri_upper)])
        tbl.add_row(['Seshadri constant <= (minimal curves)',
                     fmt(rpt.seshadri_minimal_curve_upper)])
        return tbl.draw()

    def report_warnings(self) -> str:
        """The structured warnings."""
        if not self.report.warnings:
            return ''
        tbl = tt.Texttable()
        tbl.header(['Warning', 'Detail'])
        tbl.set_cols_dtype(['t', 't'])
        for warn in self.report.warnings:
            tbl.add_row([warn.code, warn.text])
        return tbl.draw()

    def report_all(self) -> str:
        """All tables of the report."""
        parts = [
            self.report_validation(),
            self.report_relations(),
            self.report_polytope(),
            self.report_bounds(),
            self.report_warnings()
        ]
        return '\n\n'.join(part for part in parts if part)
