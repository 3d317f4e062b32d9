# -*- coding: utf-8 -*-
import json
import sys
from argparse import ArgumentParser, Namespace
from functools import partial
from types import SimpleNamespace
from typing import Any, NoReturn, override

from ui import SCHEMA_TAG, Output, Parser, Printer, UsageError

__all__ = ['CommandParser', 'JSONPrinter', 'console', 'set_verbose']


def _quiet(*args: Any, **kwargs: Any) -> None:
    """ Drop the message. """


def _log(level: str, *args: Any, **kwargs: Any) -> None:
    kwargs.pop('style', None)
    print(f'[{level}]', *args, file=sys.stderr, **kwargs)


console = SimpleNamespace(
    print=partial(print, file=sys.stderr),
    info=partial(_log, 'info'),
    success=partial(_log, 'success'),
    warning=partial(_log, 'warning'),
    error=partial(_log, 'error'),
    debug=_quiet,
)


def set_verbose(verbose: bool) -> None:
    """ Switch the debug messages on or off. """
    console.debug = partial(_log, 'debug') if verbose else _quiet


class _ArgumentParser(ArgumentParser):
    """ The parser raises instead of exiting, so that usage errors map to exit code 1. """

    @override
    def error(self, message: str) -> NoReturn:
        raise UsageError(f'{self.prog}: {message}')


def _int_list(value: str) -> list[int]:
    try:
        return [int(v) for v in value.split(',') if v]
    except ValueError:
        raise UsageError(f'expected a comma separated list of integers, got `{value}`')


class CommandParser(Parser):
    """
    The class implements the parser for the command line interface.
    Using the standard library argparse to parse the arguments.

    Command format: <command> [options]. Every command accepts the common options
    --config, --offline, --fixtures, --cache-dir, --threads, --pretty and --verbose.
    """
    COMMANDS = (
        'field-info', 'solve', 'orbits', 'criteria', 'serre-mazur',
        'classify-2L', 'density', 'warm-cache', 'purge-cache',
    )

    def __init__(self) -> None:
        """ Initialize the parser. """
        common = ArgumentParser(add_help=False)
        common.add_argument('--config', help='The JSON config file.')
        common.add_argument('--offline', action='store_true', help='Never touch the network.')
        common.add_argument('--fixtures', help='The fixture directory.')
        common.add_argument('--cache-dir', help='The LMFDB cache directory.')
        common.add_argument('--lmfdb-url', help='The LMFDB API base URL.')
        common.add_argument('--threads', type=int, help='The number of worker processes.')
        common.add_argument('--pretty', action='store_true', help='Print tables instead of JSON.')
        common.add_argument('--verbose', action='store_true', help='Print debug messages.')

        self._parser = _ArgumentParser(prog='sunit-fermat', description='S-unit equations and asymptotic Fermat.')
        commands = self._parser.add_subparsers(dest='command', required=True)

        field_options = ArgumentParser(add_help=False)
        field_options.add_argument('--field', default='rational',
                                   help='rational | quad:<d> | fixture:<name> | <descriptor path>')
        search_options = ArgumentParser(add_help=False)
        search_options.add_argument('--s', dest='primes', default='above:2', help='above:<p>,<q>,... | none')
        search_options.add_argument('--bound', type=int, help='The exponent bound.')

        commands.add_parser('field-info', parents=[common, field_options], help='Show the invariants of a field.')
        commands.add_parser('solve', parents=[common, field_options, search_options],
                            help='Solve the S-unit equation.')
        commands.add_parser('orbits', parents=[common, field_options, search_options],
                            help='Group the solutions into lambda-orbits.')

        criteria = commands.add_parser('criteria', parents=[common, field_options],
                                       help='Evaluate an asymptotic Fermat criterion.')
        criteria.add_argument('--mode', default='FS', choices=['FS', 'KO', 'DS', 'layer-rule'])
        criteria.add_argument('--coeffs', type=_int_list, default=[1, 1, 1], help='A,B,C')
        criteria.add_argument('--l', type=int, help='The prime l of the DS and layer rules.')
        criteria.add_argument('--n', type=int, default=1, help='The layer of the layer rule.')
        criteria.add_argument('--bound', type=int, help='The exponent bound.')

        serre_mazur = commands.add_parser('serre-mazur', parents=[common],
                                          help='Bound p in x^p + y^p + L^r z^p = 0.')
        serre_mazur.add_argument('--L', type=int, required=True)
        serre_mazur.add_argument('--probes', type=_int_list, help='Probe primes l, comma separated.')

        classify = commands.add_parser('classify-2L', parents=[common],
                                       help='Decide whether a full 2-torsion curve of conductor 2L exists.')
        classify.add_argument('--L', type=int, required=True)
        classify.add_argument('--bound', type=int, help='The exponent bound of the {2, L} search.')

        density = commands.add_parser('density', parents=[common], help='Survey quadratic fields.')
        density.add_argument('--X', type=int, required=True)
        density.add_argument('--family', default='real', choices=['real', 'imaginary'])
        density.add_argument('--splitting-only', action='store_true', help='Classify 2 only.')
        density.add_argument('--bound', type=int, help='The solver bound per field.')
        density.add_argument('--summary', action='store_true', help='Omit the per-field outcomes.')

        warm = commands.add_parser('warm-cache', parents=[common], help='Fetch newforms into the cache.')
        warm.add_argument('--levels', type=_int_list, required=True, help='Levels, comma separated.')

        commands.add_parser('purge-cache', parents=[common], help='Remove the cached newforms.')

    @override
    def parse(self, argv: list[str]) -> Namespace:
        """ Parse the arguments and return the namespace. """
        return self._parser.parse_args(argv)


def _dumps(obj: dict[str, Any]) -> str:
    return json.dumps({'schema': SCHEMA_TAG, **obj}, ensure_ascii=False, default=str)


class JSONPrinter(Printer):
    """ The class prints one JSON object per line to stdout. """

    @override
    def print(self, output: Output) -> None:
        """
        Print the output as JSON lines, each tagged with the schema.

        :param output: One object or a list of objects.
        """
        for line in output if isinstance(output, list) else [output]:
            sys.stdout.write(_dumps(line) + '\n')
        sys.stdout.flush()
