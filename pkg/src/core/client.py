# -*- coding: utf-8 -*-
import os.path
from argparse import Namespace
from collections.abc import Callable
from functools import partial
from typing import Any

from config import Config, ConfigManager
from core.lmfdb import LMFDBClient
from core.survey import Family, ScanSettings, squarefree_scan
from model.criteria import (GeneralizedCoefficients, Mode, afc_verdict, ds_verdict, ko_sets, ko_verdict,
                            layer_verdict, stu_sets)
from model.curve import orbit_classes, orbit_ids
from model.errors import PreconditionError
from model.field import Field, FieldDescriptor, FieldKind, PrimeIdealData, format_coords, make_field
from model.quadratic import discriminant
from model.serre_mazur import classify_conductor_2L, default_probe_primes, exponent_bound_for_L
from model.solver import SolutionSet, solve_for_primes
from model.sunit import evertse_bound
from ui import Output, Parser, Printer
from ui.cli import CommandParser, JSONPrinter

__EXIST_RICH__ = False
try:
    from ui.rich_cli import RichPrinter, console, set_verbose

    __EXIST_RICH__ = True
except ModuleNotFoundError:
    from ui.cli import console, set_verbose

__all__ = ['Client', 'parse_field', 'parse_primes']


def parse_field(text: str, fixtures_dir: str) -> Field:
    """
    Build a field from its command line form.

    :param text: ``rational``, ``quad:<d>``, ``fixture:<name>`` or the path of a descriptor.
    :param fixtures_dir: The directory holding ``fields/<name>.json``.
    :return: The field.
    """
    if text == 'rational':
        return make_field(FieldDescriptor.rational())
    if text.startswith('quad:'):
        try:
            d = int(text.removeprefix('quad:'))
        except ValueError:
            raise PreconditionError(f'invalid radicand in `{text}`')
        return make_field(FieldDescriptor.quadratic(d))
    if text.startswith('fixture:'):
        text = os.path.join(fixtures_dir, 'fields', f'{text.removeprefix("fixture:")}.json')
    if not os.path.isfile(text):
        raise PreconditionError(f'no field descriptor at `{text}`')
    return make_field(FieldDescriptor.load(text))


def parse_primes(text: str, field: Field) -> tuple[PrimeIdealData, ...]:
    """
    Build S from its command line form.

    :param text: ``above:<p>,<q>,...`` for every prime above the listed rational primes, or ``none``.
    :param field: The field.
    :return: The primes of S.
    """
    if text == 'none':
        return ()
    if not text.startswith('above:'):
        raise PreconditionError(f'S must read `above:<p>,...` or `none`, got `{text}`')
    try:
        rational_primes = [int(p) for p in text.removeprefix('above:').split(',') if p]
    except ValueError:
        raise PreconditionError(f'invalid prime list in `{text}`')
    return tuple(P for p in dict.fromkeys(rational_primes) for P in field.factor_rational_prime(p))


class Client:
    """
    The class provides the commands of the command line interface.
    All the commands are listed as below:

        - field-info: Show the invariants of a field.
        - solve: Solve the S-unit equation, one JSON line per solution and a summary line.
        - orbits: Group the solutions into lambda-orbits.
        - criteria: Evaluate an asymptotic Fermat criterion; the exit code follows the verdict.
        - serre-mazur: Bound the exponent of x^p + y^p + L^r z^p = 0.
        - classify-2L: Decide whether a full 2-torsion curve of conductor 2L exists.
        - density: Survey quadratic fields.
        - warm-cache: Fetch newforms of the given levels into the cache.
        - purge-cache: Remove the cached newforms.

    Methods:
        run: Parse the arguments, execute the command and print its output.
    """
    _COMMANDS: dict[str, Callable[[Namespace], tuple[Output, int]]]

    _parser: Parser = CommandParser()

    def __init__(self) -> None:
        """ Initialize the commands. """
        self._COMMANDS = {
            'field-info': self._field_info,
            'solve': self._solve,
            'orbits': self._orbits,
            'criteria': self._criteria,
            'serre-mazur': self._serre_mazur,
            'classify-2L': self._classify,
            'density': self._density,
            'warm-cache': self._warm_cache,
            'purge-cache': self._purge_cache,
        }
        self.config = Config()

    def run(self, argv: list[str]) -> int:
        """
        Execute one command.

        :param argv: The arguments, without the program name.
        :return: The exit code.
        """
        args = self._parser.parse(argv)
        set_verbose(args.verbose)
        self.config = ConfigManager(args.config).load()
        output, code = self._COMMANDS[args.command](args)
        self._printer(args.pretty).print(output)
        return code

    @staticmethod
    def _printer(pretty: bool) -> Printer:
        if pretty and __EXIST_RICH__:
            return RichPrinter()
        if pretty:
            console.warning('--pretty needs the rich library, printing JSON.')
        return JSONPrinter()

    def _threads(self, args: Namespace) -> int:
        return args.threads if args.threads else self.config.threads

    def _fixtures_dir(self, args: Namespace) -> str:
        return args.fixtures or self.config.fixtures_dir

    def _field(self, args: Namespace) -> Field:
        return parse_field(args.field, self._fixtures_dir(args))

    def _lmfdb(self, args: Namespace) -> LMFDBClient:
        return LMFDBClient(
            args.lmfdb_url or self.config.lmfdb_url,
            args.cache_dir or self.config.cache_dir,
            self._fixtures_dir(args),
            offline=args.offline,
        )

    def _solutions(self, args: Namespace, field: Field, primes: tuple[PrimeIdealData, ...]) -> SolutionSet:
        bound = args.bound or field.descriptor.search_bound or self.config.search_bound
        return solve_for_primes(
            field, primes, bound,
            threads=self._threads(args),
            search_cap=self.config.search_cap,
            completeness_factor=self.config.completeness_factor,
            aux_primes=self.config.aux_primes,
            fold_window=self.config.fold_window,
            class_number_cap=self.config.class_number_cap,
            generator_search_cap=self.config.generator_search_cap,
        )

    def _field_info(self, args: Namespace) -> tuple[Output, int]:
        """ Show the degree, signature, units, torsion and primes above 2 of the field. """
        field = self._field(args)
        torsion, w = field.torsion()
        info: dict[str, Any] = {
            'field': field.label,
            'kind': field.kind.value,
            'degree': field.degree,
            'signature': list(field.signature),
            'torsion': {'generator': format_coords(torsion.coords), 'order': w},
        }
        if field.kind is FieldKind.QUADRATIC:
            info['d'] = field.d
            info['discriminant'] = discriminant(field.d)
        if field.kind is not FieldKind.RATIONAL:
            info['class_number'] = field.class_number(self.config.class_number_cap)
        info['units'] = [format_coords(u.coords) for u in field.unit_generators()]
        info['primes_above_2'] = [
            {'label': P.label, 'e': P.e, 'f': P.f, 'norm': P.norm} for P in field.factor_rational_prime(2)
        ]
        return info, 0

    def _solve(self, args: Namespace) -> tuple[Output, int]:
        """ Solve the S-unit equation, one line per solution followed by the summary. """
        field = self._field(args)
        primes = parse_primes(args.primes, field)
        solutions = self._solutions(args, field, primes)
        ids = orbit_ids(orbit_classes(solutions))
        summary = solutions.summary() | {'evertse_bound': evertse_bound(field, primes)}
        return [*solutions.records(ids), {'summary': summary}], 0

    def _orbits(self, args: Namespace) -> tuple[Output, int]:
        """ Group the solutions into lambda-orbits, one line per orbit. """
        field = self._field(args)
        solutions = self._solutions(args, field, parse_primes(args.primes, field))
        return [{'orbit_id': i, **orbit.report()} for i, orbit in enumerate(orbit_classes(solutions))], 0

    def _criteria(self, args: Namespace) -> tuple[Output, int]:
        """ Evaluate the criterion of --mode; the exit code is 0, 2 or 3 by verdict. """
        mode = Mode(args.mode)
        match mode:
            case Mode.DS:
                report = ds_verdict(self._coefficients(args), self._require_l(args))
            case Mode.LAYER:
                report = layer_verdict(self._require_l(args), args.n)
            case Mode.KO:
                field = self._field(args)
                coeffs = self._coefficients(args)
                report = ko_verdict(field, coeffs, self._solutions(args, field, ko_sets(field, coeffs).S))
            case _:
                field = self._field(args)
                report = afc_verdict(field, self._solutions(args, field, stu_sets(field).S))
        return report.to_dict(), report.exit_code

    @staticmethod
    def _coefficients(args: Namespace) -> GeneralizedCoefficients:
        if len(args.coeffs) != 3:
            raise PreconditionError(f'--coeffs needs three integers, got {args.coeffs}')
        return GeneralizedCoefficients(*args.coeffs)

    @staticmethod
    def _require_l(args: Namespace) -> int:
        if args.l is None:
            raise PreconditionError(f'--mode {args.mode} needs --l')
        return args.l

    def _serre_mazur(self, args: Namespace) -> tuple[Output, int]:
        """ Bound the exponent from the newforms of level 2L. """
        L = args.L
        forms = self._lmfdb(args).fetch_newforms(2 * L) if L != 2 else []
        probes = args.probes or default_probe_primes(L, self.config.probe_primes)
        classify = partial(classify_conductor_2L, bound=self.config.classify_bound)
        return exponent_bound_for_L(L, forms, probes, classify=classify).to_dict(), 0

    def _classify(self, args: Namespace) -> tuple[Output, int]:
        """ Classify the curves of conductor 2L with full 2-torsion. """
        classification, witness = classify_conductor_2L(args.L, args.bound or self.config.classify_bound)
        return {'L': args.L, 'status': classification.value, 'witness': witness}, 0

    def _density(self, args: Namespace) -> tuple[Output, int]:
        """ Survey the squarefree d up to X. """
        settings = ScanSettings.from_config(self.config, args.splitting_only, args.bound)
        report = squarefree_scan(args.X, Family(args.family), settings, self._threads(args))
        return report.to_dict(with_fields=not args.summary), 0

    def _warm_cache(self, args: Namespace) -> tuple[Output, int]:
        """ Fetch the newforms of the levels into the cache. """
        summary = self._lmfdb(args).warm_cache(args.levels, self._threads(args))
        return summary.to_dict(), 1 if summary.missed else 0

    def _purge_cache(self, args: Namespace) -> tuple[Output, int]:
        """ Remove the cached newforms. """
        return {'removed': self._lmfdb(args).purge_cache()}, 0
