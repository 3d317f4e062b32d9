# -*- coding: utf-8 -*-
"""
Density surveys over the real or imaginary quadratic fields Q(sqrt(+-d)) with 2 <= d <= X squarefree.
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Self

from model.criteria import GeneralizedCoefficients, afc_verdict, ko_sets, ko_verdict, stu_sets
from model.errors import PreconditionError, ResourceError, UnsupportedFieldError
from model.field import FieldDescriptor, make_field
from model.quadratic import Splitting, is_squarefree, splitting_of_2
from model.solver import solve_for_primes

__all__ = ['DensityReport', 'Family', 'FieldOutcome', 'ScanSettings', 'squarefree_scan']

SKIPPED = 'skipped'

_CHUNK = 64


class Family(Enum):
    """ The class defines the quadratic fields a scan runs over: Q(sqrt d) or Q(sqrt -d) for squarefree d. """
    REAL = 'real'
    IMAGINARY = 'imaginary'

    @classmethod
    def __numbers__(cls) -> list[str]:
        """ Return the list of all families. """
        return [family.value for family in cls]


@dataclass(frozen=True)
class ScanSettings:
    """
    The class holds the pipeline settings of one scan; it is sent to the worker processes.

    Attributes:
        bound: The solver exponent bound per field.
        splitting_only: Whether to classify 2 without running the solver.
    """
    bound: int = 6
    splitting_only: bool = False
    search_cap: int = 2 * 10 ** 8
    completeness_factor: float = 1.5
    aux_primes: int = 6
    fold_window: int = 64
    class_number_cap: int = 10 ** 6
    generator_search_cap: int = 2 * 10 ** 6

    @classmethod
    def from_config(cls, config: Any, splitting_only: bool = False, bound: int | None = None) -> Self:
        """ Build the settings from a ``config.Config``. """
        return cls(
            bound=bound or config.survey_bound,
            splitting_only=splitting_only,
            search_cap=config.search_cap,
            completeness_factor=config.completeness_factor,
            aux_primes=config.aux_primes,
            fold_window=config.fold_window,
            class_number_cap=config.class_number_cap,
            generator_search_cap=config.generator_search_cap,
        )


@dataclass(frozen=True)
class FieldOutcome:
    """
    The class records the survey result of one field.

    Attributes:
        d: The radicand, negative in the imaginary family.
        splitting: How 2 decomposes.
        verdict: The verdict value, ``skipped`` or None in splitting-only scans.
        reason: Why the field was skipped.
    """
    d: int
    splitting: Splitting
    verdict: str | None = None
    reason: str | None = None

    def to_dict(self) -> dict[str, Any]:
        result = {'d': self.d, 'splitting': self.splitting.value, 'verdict': self.verdict}
        if self.reason:
            result['reason'] = self.reason
        return result


def _proportions(counts: dict[str, int], total: int) -> dict[str, Fraction]:
    return {k: Fraction(v, total) for k, v in counts.items()} if total else {}


@dataclass(frozen=True)
class DensityReport:
    """
    The class represents the tallies of one scan.

    Attributes:
        X: The scan limit.
        family: The family of fields.
        splitting: Counts per decomposition type of 2.
        verdicts: Counts per verdict, ``skipped`` included; empty in splitting-only scans.
        fields: One outcome per squarefree d, in increasing order of |d|.
    """
    X: int
    family: Family
    splitting: dict[str, int]
    verdicts: dict[str, int]
    fields: tuple[FieldOutcome, ...] = field(default=(), compare=False)

    @property
    def total(self) -> int:
        return len(self.fields)

    @property
    def splitting_proportions(self) -> dict[str, Fraction]:
        return _proportions(self.splitting, self.total)

    @property
    def verdict_proportions(self) -> dict[str, Fraction]:
        return _proportions(self.verdicts, self.total)

    def to_dict(self, with_fields: bool = True) -> dict[str, Any]:
        result = {
            'X': self.X,
            'family': self.family.value,
            'total': self.total,
            'splitting': self.splitting,
            'splitting_proportions': {k: str(v) for k, v in self.splitting_proportions.items()},
            'verdicts': self.verdicts,
            'verdict_proportions': {k: str(v) for k, v in self.verdict_proportions.items()},
        }
        if with_fields:
            result['fields'] = [f.to_dict() for f in self.fields]
        return result


def _field_verdict(d: int, family: Family, settings: ScanSettings) -> str:
    """ Run the criterion pipeline on Q(sqrt(d)) and return the verdict value. """
    k = make_field(FieldDescriptor.quadratic(d))
    if family is Family.REAL:
        sets = stu_sets(k)
    else:
        coeffs = GeneralizedCoefficients(1, 1, 1)
        sets = ko_sets(k, coeffs)

    solutions = solve_for_primes(
        k, sets.S, settings.bound,
        search_cap=settings.search_cap,
        completeness_factor=settings.completeness_factor,
        aux_primes=settings.aux_primes,
        fold_window=settings.fold_window,
        class_number_cap=settings.class_number_cap,
        generator_search_cap=settings.generator_search_cap,
    )

    if family is Family.REAL:
        return afc_verdict(k, solutions).verdict.value
    return ko_verdict(k, coeffs, solutions).verdict.value


def _survey_one(d: int, family: Family, settings: ScanSettings) -> FieldOutcome:
    radicand = d if family is Family.REAL else -d
    splitting = splitting_of_2(radicand)
    if settings.splitting_only:
        return FieldOutcome(radicand, splitting)
    if radicand == -3:
        return FieldOutcome(radicand, splitting, SKIPPED, 'the field contains a primitive cube root of unity')
    try:
        return FieldOutcome(radicand, splitting, _field_verdict(radicand, family, settings))
    except (ResourceError, UnsupportedFieldError) as e:
        return FieldOutcome(radicand, splitting, SKIPPED, str(e))


def _survey_chunk(args: tuple[list[int], Family, ScanSettings]) -> list[FieldOutcome]:
    chunk, family, settings = args
    return [_survey_one(d, family, settings) for d in chunk]


def squarefree_scan(X: int, family: Family, settings: ScanSettings | None = None, threads: int = 1) -> DensityReport:
    """
    Survey Q(sqrt(d)) (real family) or Q(sqrt(-d)) (imaginary family) for squarefree 2 <= d <= X.

    The decomposition of 2 comes from d mod 8. Unless the scan is splitting-only,
    every field runs the criterion pipeline: the asymptotic Fermat criterion for
    real fields, the generalized criterion with A = B = C = 1 for imaginary ones.
    Fields exceeding a configured cap are tallied as skipped. Chunks are reduced
    in order, so the report does not depend on the number of workers.

    :param X: The scan limit, at least 2.
    :param family: The family of fields.
    :param settings: The pipeline settings.
    :param threads: The number of worker processes.
    :return: The report.
    """
    if X < 2:
        raise PreconditionError(f'X must be at least 2, got {X}')
    settings = settings or ScanSettings()
    radicands = [d for d in range(2, X + 1) if is_squarefree(d)]
    chunks = [(radicands[i:i + _CHUNK], family, settings) for i in range(0, len(radicands), _CHUNK)]

    if threads > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            parts = list(executor.map(_survey_chunk, chunks))
    else:
        parts = [_survey_chunk(chunk) for chunk in chunks]
    outcomes = tuple(outcome for part in parts for outcome in part)

    splitting = Counter(o.splitting.value for o in outcomes)
    verdicts = Counter(o.verdict for o in outcomes if o.verdict is not None)
    return DensityReport(
        X, family,
        splitting={s.value: splitting.get(s.value, 0) for s in Splitting},
        verdicts=dict(sorted(verdicts.items())),
        fields=outcomes,
    )
