"""
The command line flow that integrates all modules
"""
import argparse
import json
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

import texttable as tt

from .config import build_config
from .divisor import KaehlerClass, Relation, class_group, is_ample, normalize_kappa
from .document import FanDocument, load_fan_file
from .errors import ToricError, ValidationError
from .fan import Fan, require_complete, require_smooth_complete, validate_fan
from .logger import attach_log_file, get_default_logger, set_global_level
from .polytope import lattice_width, momentum_polytope
from .primcoll import free_curve_certificate, is_fano, primitive_relations
from .relations import gamma, lambda_discrepancies, lambda_lu
from .report import Reporter, encode_json, fmt, run_report, serialize_report

COMMANDS = [
    'validate', 'report', 'gamma', 'lambda', 'primcoll', 'fano', 'width', 'polytope',
    'curve-cert', 'class-group', 'ample'
]


def arg_parser(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse user arguments."""

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('fan', action='store', help='path to the fan document (JSON)')
    common.add_argument('--normalize',
                        required=False,
                        action='store_true',
                        default=False,
                        help='replace kappa by a non-negative representative first')
    common.add_argument('--json',
                        required=False,
                        action='store_true',
                        default=False,
                        help='print machine-readable output')
    common.add_argument('--search-bound',
                        required=False,
                        action='store',
                        type=int,
                        default=None,
                        help='sup-norm cap of the lattice width directions')
    common.add_argument('--config',
                        required=False,
                        action='store',
                        default=None,
                        help='path to the configure JSON file')
    common.add_argument('--log-level',
                        required=False,
                        action='store',
                        default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='logging level')
    common.add_argument('--log-file',
                        required=False,
                        action='store',
                        default=None,
                        help='duplicate log messages to this file')
    common.add_argument('--relation',
                        required=False,
                        action='store',
                        default=None,
                        help='comma separated relation for curve-cert (default: gamma minimizer)')

    parser = argparse.ArgumentParser(prog='toricbound',
                                     description='Exact toric bounds on Gromov widths')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common])

    return parser.parse_args(argv)


class Main():
    """The main command line flow.

    Attributes:
        args: Flow arguments.
        log: Logger.
        config: A dictionary of configurations.
    """

    def __init__(self, argv: Optional[List[str]] = None):
        """Constructor.

        Args:
            argv: The arguments, sys.argv if None.
        """
        self.args = arg_parser(argv)
        if self.args.log_file:
            attach_log_file(self.args.log_file)
        set_global_level(self.args.log_level)
        self.log = get_default_logger('Main')
        self.config = self.load_config()
        if self.args.log_level is None:
            set_global_level(self.config['log']['level'])

    def load_config(self) -> Dict[str, Any]:
        """Load the configurations and apply the command line overrides.

        Returns:
            A dictionary of configurations.
        """

        user_config: Dict[str, Any] = {}
        if self.args.config:
            try:
                with open(self.args.config, 'r', errors='replace') as filep:
                    user_config = json.load(filep)
            except (OSError, ValueError) as err:
                self.log.error('Failed to load config: %s', str(err))
                sys.exit(ValidationError.exit_code)
            if not isinstance(user_config, dict):
                self.log.error('Config %s must be a JSON object', self.args.config)
                sys.exit(ValidationError.exit_code)

        if self.args.normalize:
            user_config['kappa.normalize'] = True
        if self.args.search_bound is not None:
            user_config['width.search-bound'] = self.args.search_bound
        if self.args.log_level is not None:
            user_config['log.level'] = self.args.log_level

        config = build_config(user_config)
        if config is None:
            self.log.error('Config is invalid')
            sys.exit(ValidationError.exit_code)
        return config

    def kappa_of(self, doc: FanDocument,
                 require: Optional[Callable[[Fan], None]] = None) -> KaehlerClass:
        """The Kaehler class of the document, normalized if requested.

        The fan check runs before the normalization.
        """
        if doc.kappa is None:
            raise ValidationError(ToricError.Code.BAD_DOCUMENT, 'the document has no kappa')
        if require is not None:
            require(doc.fan)
        if self.config['kappa']['normalize']:
            return normalize_kappa(doc.fan, doc.kappa)
        return doc.kappa

    def cmd_validate(self, doc: FanDocument) -> Tuple[Any, str]:
        #pylint:disable=missing-docstring
        flags = validate_fan(doc.fan)
        tbl = tt.Texttable()
        tbl.header(['Property', 'Value'])
        for key, value in flags._asdict().items():
            tbl.add_row([key, fmt(value)])
        return flags._asdict(), tbl.draw()

    def cmd_report(self, doc: FanDocument) -> Tuple[Any, str]:
        #pylint:disable=missing-docstring
        report = run_report(doc, self.config)
        return report, Reporter(report).report_all()

    def cmd_gamma(self, doc: FanDocument) -> Tuple[Any, str]:
        #pylint:disable=missing-docstring
        result = gamma(doc.fan, self.kappa_of(doc, require_smooth_complete), self.config)
        text = 'gamma = {0}\nminimizer = {1}\nattained by a 0/1 relation: {2}'.format(
            result.value, fmt(result.minimizer.a), fmt(result.attained_by_binary))
        if not result.complete:
            text += '\nSEARCH_CAPPED: the relation search was capped, gamma is an upper bound'
        return result, text

    def cmd_lambda(self, doc: FanDocument) -> Tuple[Any, str]:
        #pylint:disable=missing-docstring
        value = lambda_lu(doc.fan, self.kappa_of(doc, require_smooth_complete), self.config)
        escaping = lambda_discrepancies(doc.fan, self.config)
        lines = ['Lambda = {0}'.format(value)]
        for rel in escaping:
            lines.append(
                'LAMBDA_DEGREE_CAP: minimal relation {0} of degree {1} exceeds {2}'.format(
                    fmt(rel.a), rel.total_degree, doc.dim + 1))
        return {'value': value, 'escaping': escaping}, '\n'.join(lines)

    def cmd_primcoll(self, doc: FanDocument) -> Tuple[Any, str]:
        #pylint:disable=missing-docstring
        prims = primitive_relations(doc.fan)
        tbl = tt.Texttable()
        tbl.header(['Collection', 'Cone', 'Coefficients', 'Degree'])
        tbl.set_cols_dtype(['t'] * 4)
        for prim in prims:
            tbl.add_row([
                fmt(prim.collection.indices),
                fmt(prim.sigma),
                fmt(prim.coefficients),
                str(prim.degree)
            ])
        return prims, tbl.draw()

    def cmd_fano(self, doc: FanDocument) -> Tuple[Any, str]:
        #pylint:disable=missing-docstring
        fano = is_fano(doc.fan)
        return {'fano': fano}, 'Fano: {0}'.format(fmt(fano))

    def cmd_polytope(self, doc: FanDocument) -> Tuple[Any, str]:
        #pylint:disable=missing-docstring
        poly = momentum_polytope(doc.fan, self.kappa_of(doc, require_complete))
        return poly.vertices, '\n'.join(fmt(vert) for vert in poly.vertices)

    def cmd_width(self, doc: FanDocument) -> Tuple[Any, str]:
        #pylint:disable=missing-docstring
        kappa = self.kappa_of(doc, require_complete)
        poly = momentum_polytope(doc.fan, kappa)

        certificate = None
        flags = validate_fan(doc.fan)
        if flags.smooth_complete and kappa.is_nonnegative() and is_ample(doc.fan, kappa):
            bound = gamma(doc.fan, kappa, self.config)
            certificate = bound.value if bound.complete else None

        result = lattice_width(poly,
                               search_bound=self.config['width']['search-bound'] or None,
                               certificate=certificate,
                               max_doublings=self.config['width']['max-doublings'])
        text = 'width = {0} along {1} (search bound {2})'.format(result.value,
                                                                fmt(result.direction),
                                                                result.search_bound)
        if not result.certified:
            self.log.warning('WIDTH_UNCERTIFIED: the direction search is not certified')
            text += '\nWIDTH_UNCERTIFIED: the direction search is not certified'
        return result._asdict(), text

    def cmd_curve_cert(self, doc: FanDocument) -> Tuple[Any, str]:
        #pylint:disable=missing-docstring
        kappa = self.kappa_of(doc) if doc.kappa is not None else None
        if self.args.relation:
            try:
                rel = Relation.of([int(e) for e in self.args.relation.split(',')])
            except ValueError:
                raise ValidationError(ToricError.Code.BAD_NUMBER,
                                      'malformed relation "{0}"'.format(self.args.relation))
        else:
            if kappa is None:
                raise ValidationError(ToricError.Code.BAD_DOCUMENT,
                                      'curve-cert needs --relation or a kappa')
            rel = gamma(doc.fan, kappa, self.config).minimizer

        cert = free_curve_certificate(doc.fan, rel, kappa)
        tbl = tt.Texttable()
        tbl.header(['Coordinate', 'Exponents (c, order)', 'Sum'])
        tbl.set_cols_dtype(['t'] * 3)
        for idx, (coord, total) in enumerate(zip(cert.exponents, cert.exponent_sums)):
            tbl.add_row([
                str(idx), ', '.join('({0}, {1})'.format(c, exp) for c, exp in coord),
                str(total)
            ])
        text = 'relation = {0}\nmarkers = {1}\n{2}\nsymplectic area = {3}'.format(
            fmt(rel.a), ', '.join('{0}:{1}'.format(idx, c) for idx, c in cert.markers),
            tbl.draw(), fmt(cert.symplectic_area))
        return cert, text

    def cmd_class_group(self, doc: FanDocument) -> Tuple[Any, str]:
        #pylint:disable=missing-docstring
        group = class_group(doc.fan)
        text = 'Cl(X) = Z^{0}{1}'.format(
            group.free_rank, ''.join(' + Z/{0}'.format(order) for order in group.torsion))
        for idx in range(doc.fan.ray_count):
            text += '\n[D_{0}] = {1}'.format(idx, fmt(group.presentation.col(idx)))
        return group, text

    def cmd_ample(self, doc: FanDocument) -> Tuple[Any, str]:
        #pylint:disable=missing-docstring
        ample = is_ample(doc.fan, self.kappa_of(doc, require_smooth_complete))
        return {'ample': ample}, 'Ample: {0}'.format(fmt(ample))

    def run(self) -> int:
        """Run the requested command.

        Returns:
            The exit code: 0 on success, 2 on validation errors, 3 on computation errors.
        """
        handler: Callable[[FanDocument], Tuple[Any, str]] = getattr(
            self, 'cmd_{0}'.format(self.args.command.replace('-', '_')))
        try:
            try:
                doc = load_fan_file(self.args.fan)
            except OSError as err:
                raise ValidationError(ToricError.Code.BAD_DOCUMENT,
                                      'cannot read {0}: {1}'.format(self.args.fan, err))
            payload, text = handler(doc)
        except ToricError as err:
            self.log.error('%s', str(err))
            return err.exit_code

        if self.args.json:
            print(serialize_report(payload) if self.args.command == 'report' else
                  encode_json(payload))
        else:
            print(text)
        return 0

    def main(self) -> None:
        """The main function of the command line flow."""
        sys.exit(self.run())


def console_main() -> None:
    """The console script entry."""
    Main().main()
