# -*- coding: utf-8 -*-
"""
Criteria under which the asymptotic Fermat conjecture holds over a number field,
evaluated from the solutions of the S-unit equation.
"""
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from itertools import product
from typing import Any

from sympy import factorint, isprime

from model.errors import HypothesisViolationError, PreconditionError
from model.field import Field, FieldKind, PrimeIdealData
from model.solver import ObstructionReport, SolutionSet, SUnitSolution, m_value, obstructions

__all__ = [
    'CriterionReport',
    'ESStatus',
    'GeneralizedCoefficients',
    'Mode',
    'STUSets',
    'SolutionRecord',
    'Verdict',
    'afc_verdict',
    'check_condition_A',
    'check_condition_B',
    'ds_congruence_check',
    'ds_verdict',
    'es_status',
    'generalized_omega_check',
    'is_wieferich',
    'ko_sets',
    'ko_verdict',
    'layer_verdict',
    'stu_sets',
    'unit_equation_obstruction_report',
]

HEURISTIC_CAVEAT = 'search-complete heuristic'
INCOMPLETE_CAVEAT = 'solver completeness flag unset'


class Mode(Enum):
    """
    The class defines the criteria a report can come from.

    Attributes:
        FS: The criterion over S = the primes above 2.
        KO: The generalized equation A x^p + B y^p + C z^p = 0.
        DS: The congruence criterion over Q.
        LAYER: The rule for the layers of the cyclotomic Z_l-extension of Q.
    """
    FS = 'FS'
    KO = 'KO'
    DS = 'DS'
    LAYER = 'layer-rule'


class Verdict(Enum):
    """
    The class defines the outcome of a criterion.

    Attributes:
        HOLDS: The conjecture holds.
        HOLDS_CONDITIONALLY: The conjecture holds if the recorded conjectures do.
        INCONCLUSIVE: The criterion decides nothing.
    """
    HOLDS = 'AFC-holds'
    HOLDS_CONDITIONALLY = 'AFC-holds-conditionally'
    INCONCLUSIVE = 'inconclusive'

    @classmethod
    def __numbers__(cls) -> list[str]:
        """ Return the list of all verdicts. """
        return [verdict.value for verdict in cls]

    @property
    def exit_code(self) -> int:
        """ Return the exit code of the command line interface. """
        match self:
            case Verdict.HOLDS:
                return 0
            case Verdict.HOLDS_CONDITIONALLY:
                return 2
        return 3


class ESStatus(Enum):
    """ The class defines which branch of the Eichler-Shimura hypothesis is met. """
    DEGREE_ODD = 'degree odd'
    T_NONEMPTY = 'T nonempty'
    CONJECTURE_ASSUMED = 'conjecture assumed'

    @property
    def unconditional(self) -> bool:
        return self is not ESStatus.CONJECTURE_ASSUMED


@dataclass(frozen=True)
class STUSets:
    """
    The class holds the prime sets of the criterion.

    Attributes:
        S: The primes of the S-unit equation.
        T: The primes of S above 2 with residue degree 1.
        U: The primes of S above 2 with 3 not dividing ord_P(2).
    """
    S: tuple[PrimeIdealData, ...]
    T: tuple[PrimeIdealData, ...]
    U: tuple[PrimeIdealData, ...]

    def to_dict(self) -> dict[str, list[str]]:
        return {name: [P.label for P in getattr(self, name)] for name in ('S', 'T', 'U')}


@dataclass(frozen=True)
class SolutionRecord:
    index: int
    condition: str | None
    witness: str | None


@dataclass(frozen=True)
class CriterionReport:
    """
    The class represents the outcome of a criterion over one field.

    Attributes:
        field: The field label.
        mode: The criterion evaluated.
        verdict: The outcome.
        records: One record per solution.
        es_status: The Eichler-Shimura branch, where it applies.
        assumed: The conjectures the verdict depends on.
        caveats: Remarks qualifying the verdict.
    """
    field: str
    mode: Mode
    verdict: Verdict
    records: tuple[SolutionRecord, ...] = ()
    es_status: ESStatus | None = None
    assumed: tuple[str, ...] = ()
    caveats: tuple[str, ...] = ()
    details: dict[str, Any] = dataclass_field(default_factory=dict, compare=False)

    @property
    def exit_code(self) -> int:
        return self.verdict.exit_code

    def to_dict(self) -> dict[str, Any]:
        return {
            'field': self.field,
            'mode': self.mode.value,
            'verdict': self.verdict.value,
            'es_status': self.es_status.value if self.es_status else None,
            'assumed': list(self.assumed),
            'caveats': list(self.caveats),
            'records': [
                {'solution': r.index, 'condition': r.condition, 'witness': r.witness}
                for r in self.records
            ],
            **self.details,
        }


@dataclass(frozen=True)
class GeneralizedCoefficients:
    """
    The class holds the coefficients of A x^p + B y^p + C z^p = 0 over Q.

    Attributes:
        A, B, C: Nonzero integers.
    """
    A: int
    B: int
    C: int

    def __post_init__(self) -> None:
        if not (self.A and self.B and self.C):
            raise PreconditionError('coefficients must be nonzero')

    @property
    def radical_primes(self) -> tuple[int, ...]:
        """ Return the primes dividing ABC. """
        return tuple(sorted(factorint(abs(self.A * self.B * self.C))))

    def to_dict(self) -> dict[str, int]:
        return {'A': self.A, 'B': self.B, 'C': self.C}


def stu_sets(field: Field) -> STUSets:
    """
    Return S (primes above 2), T (those of residue degree 1) and U (those with 3 not dividing ord_P(2)).

    :raises UnsupportedFieldError: If the primes above 2 are unknown.
    """
    S = tuple(field.factor_rational_prime(2))
    return STUSets(S, tuple(P for P in S if P.f == 1), tuple(P for P in S if P.e % 3))


def check_condition_A(sol: SUnitSolution, T: tuple[PrimeIdealData, ...] | list[PrimeIdealData]) -> PrimeIdealData | None:
    """ Return the first P in T with max(|ord_P lambda|, |ord_P mu|) <= 4 ord_P(2). """
    for P in T:
        if m_value(sol, P) <= 4 * P.e:
            return P
    return None


def check_condition_B(sol: SUnitSolution, U: tuple[PrimeIdealData, ...] | list[PrimeIdealData]) -> PrimeIdealData | None:
    """ Return the first P in U meeting the bound of condition A and ord_P(lambda mu) = ord_P(2) mod 3. """
    for P in U:
        if m_value(sol, P) <= 4 * P.e and (P.ord(sol.lam) + P.ord(sol.mu) - P.e) % 3 == 0:
            return P
    return None


def es_status(field: Field, sets: STUSets) -> ESStatus:
    if field.degree % 2:
        return ESStatus.DEGREE_ODD
    if sets.T:
        return ESStatus.T_NONEMPTY
    return ESStatus.CONJECTURE_ASSUMED


def _records(solutions: SolutionSet, sets: STUSets) -> list[SolutionRecord]:
    records = []
    for i, sol in enumerate(solutions):
        if (P := check_condition_A(sol, sets.T)) is not None:
            records.append(SolutionRecord(i, 'A', P.label))
        elif (P := check_condition_B(sol, sets.U)) is not None:
            records.append(SolutionRecord(i, 'B', P.label))
        else:
            records.append(SolutionRecord(i, None, None))
    return records


def _search_verdict(records: list[SolutionRecord], solutions: SolutionSet, conditional: bool
                    ) -> tuple[Verdict, list[str]]:
    caveats = []
    if any(r.condition is None for r in records):
        failing = sum(r.condition is None for r in records)
        return Verdict.INCONCLUSIVE, [f'{failing} solutions satisfy neither condition']
    if not solutions.complete:
        return Verdict.INCONCLUSIVE, [INCOMPLETE_CAVEAT]
    if solutions.obstructed:
        caveats.append('the S-unit equation has no solutions')
    else:
        caveats.append(HEURISTIC_CAVEAT)
    return (Verdict.HOLDS_CONDITIONALLY if conditional else Verdict.HOLDS), caveats


def afc_verdict(field: Field, solutions: SolutionSet, status: ESStatus | None = None) -> CriterionReport:
    """
    Decide the asymptotic Fermat conjecture over a field from its S-unit solutions.

    Every solution must satisfy condition A at a prime of T or condition B at a
    prime of U. The verdict is conditional when only the conjecture branch of the
    Eichler-Shimura hypothesis is available, and inconclusive when a solution fails
    both conditions or the search did not pass its completeness check.

    :param field: The number field.
    :param solutions: The solutions for S = the primes above 2.
    :param status: The Eichler-Shimura branch, derived from the field when omitted.
    :return: The report.
    """
    sets = stu_sets(field)
    if tuple(solutions.primes) != sets.S:
        raise PreconditionError('solutions must be computed for S = the primes above 2')
    status = status or es_status(field, sets)
    records = _records(solutions, sets)
    verdict, caveats = _search_verdict(records, solutions, not status.unconditional)
    return CriterionReport(
        field.label, Mode.FS, verdict, tuple(records), status,
        assumed=() if status.unconditional else ('Eichler-Shimura',),
        caveats=tuple(caveats),
        details={
            'sets': sets.to_dict(), 'solutions': len(solutions), 'complete': solutions.complete,
            'obstructions': unit_equation_obstruction_report(field, sets).to_dict(),
        },
    )


def unit_equation_obstruction_report(field: Field, sets: STUSets) -> ObstructionReport:
    """ Return the obstructions of the unit equation for the S of the criterion. """
    return obstructions(field, sets.S)


def _primes_above(field: Field, p: int) -> tuple[PrimeIdealData, ...]:
    return tuple(field.factor_rational_prime(p))


def ko_sets(field: Field, coeffs: GeneralizedCoefficients) -> STUSets:
    """
    Return S (primes dividing 2 ABC), T (degree-1 primes above 2) and U for the generalized equation.

    :raises HypothesisViolationError: If a coefficient is even.
    """
    for name, value in coeffs.to_dict().items():
        if value % 2 == 0:
            raise HypothesisViolationError(f'{name} = {value} is even')
    above_2 = _primes_above(field, 2)
    S = above_2 + tuple(P for q in coeffs.radical_primes for P in _primes_above(field, q))
    return STUSets(S, tuple(P for P in above_2 if P.f == 1), tuple(P for P in above_2 if P.e % 3))


def generalized_omega_check(coeffs: GeneralizedCoefficients) -> bool:
    """ Return whether A w1 + B w2 + C w3 != 0 for every choice of signs w. """
    return all(coeffs.A * a + coeffs.B * b + coeffs.C * c for a, b, c in product((1, -1), repeat=3))


def ko_verdict(field: Field, coeffs: GeneralizedCoefficients, solutions: SolutionSet) -> CriterionReport:
    """
    Decide the generalized equation A x^p + B y^p + C z^p = 0 from the solutions over S = {P | 2ABC}.

    Over Q both conjectures the criterion rests on are theorems, elsewhere they are recorded as assumed.
    """
    sets = ko_sets(field, coeffs)
    records = []
    for i, sol in enumerate(solutions):
        P = check_condition_A(sol, sets.T)
        records.append(SolutionRecord(i, 'A' if P else None, P.label if P else None))

    rational = field.kind is FieldKind.RATIONAL
    assumed = () if rational else ('conjecture I', 'conjecture II')
    if rational and not generalized_omega_check(coeffs):
        verdict, caveats = Verdict.INCONCLUSIVE, ['A w1 + B w2 + C w3 = 0 for some signs w']
    else:
        verdict, caveats = _search_verdict(records, solutions, not rational)
    return CriterionReport(
        field.label, Mode.KO, verdict, tuple(records), None, assumed, tuple(caveats),
        details={
            'sets': sets.to_dict(), 'coefficients': coeffs.to_dict(), 'solutions': len(solutions),
            'obstructions': unit_equation_obstruction_report(field, sets).to_dict(),
        },
    )


def _check_odd_prime(l: int) -> None:
    if l < 3 or not isprime(l):
        raise PreconditionError(f'{l} is not an odd prime')


def ds_congruence_check(coeffs: GeneralizedCoefficients, l: int) -> bool:
    """ Return whether every prime dividing ABC is +-1 mod 4l. """
    _check_odd_prime(l)
    modulus = 4 * l
    return all(q % modulus in (1, modulus - 1) for q in coeffs.radical_primes)


def ds_verdict(coeffs: GeneralizedCoefficients, l: int) -> CriterionReport:
    """ Report the congruence criterion over Q for the coefficients and l. """
    holds = ds_congruence_check(coeffs, l)
    return CriterionReport(
        'Q', Mode.DS, Verdict.HOLDS if holds else Verdict.INCONCLUSIVE,
        caveats=() if holds else (f'a prime dividing ABC is not +-1 mod {4 * l}',),
        details={'coefficients': coeffs.to_dict(), 'l': l},
    )


def is_wieferich(l: int) -> bool:
    """ Return whether 2^(l - 1) = 1 mod l^2. """
    _check_odd_prime(l)
    return pow(2, l - 1, l * l) == 1


def layer_verdict(l: int, n: int) -> CriterionReport:
    """
    Decide the n-th layer of the cyclotomic Z_l-extension of Q.

    :param l: A prime.
    :param n: The layer, at least 1.
    :return: AFC-holds for l = 2 and for non-Wieferich l >= 5, inconclusive otherwise.
    """
    if not isprime(l):
        raise PreconditionError(f'{l} is not prime')
    if n < 1:
        raise PreconditionError(f'layer must be positive, got {n}')
    label = f'Q_{n},{l}'
    if l == 2:
        return CriterionReport(label, Mode.LAYER, Verdict.HOLDS, details={'l': l, 'n': n})
    if l >= 5 and not is_wieferich(l):
        return CriterionReport(label, Mode.LAYER, Verdict.HOLDS, caveats=(f'{l} is non-Wieferich',),
                               details={'l': l, 'n': n})
    reason = 'l = 3 is not covered' if l == 3 else f'{l} is a Wieferich prime'
    return CriterionReport(label, Mode.LAYER, Verdict.INCONCLUSIVE, caveats=(reason,), details={'l': l, 'n': n})
