# -*- coding: utf-8 -*-
"""
The S-unit equation lambda + mu = 1 solved by a sieved search over an exponent box.
"""
import math
import time
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from model.errors import DomainError, PreconditionError, ResourceError, UnsupportedFieldError
from model.field import Field, FieldElement, PrimeIdealData, format_coords
from model.residue import sieve_box
from model.sunit import ExponentVector, SUnitGroup, build_sunit_group, is_sunit

try:
    from ui.rich_cli import console
except ModuleNotFoundError:
    from ui.cli import console

__all__ = [
    'Obstruction',
    'ObstructionKind',
    'ObstructionReport',
    'SUnitSolution',
    'SolutionSet',
    'descent_step',
    'm_value',
    'obstructions',
    'solve',
    'solve_for_primes',
    'verify_solution',
]


@dataclass(frozen=True)
class SUnitSolution:
    """
    The class represents a solution of lambda + mu = 1.

    Attributes:
        lam: lambda.
        mu: mu = 1 - lambda.
        lam_exponents: The exponent vector of lambda, when a group is at hand.
        mu_exponents: The exponent vector of mu, when a group is at hand.
    """
    lam: FieldElement
    mu: FieldElement
    lam_exponents: ExponentVector | None = None
    mu_exponents: ExponentVector | None = None

    def __post_init__(self) -> None:
        if self.lam + self.mu != 1:
            raise DomainError(f'{self.lam} + {self.mu} != 1')
        if self.lam.is_zero() or self.mu.is_zero():
            raise DomainError('lambda and mu must be nonzero')

    def swap(self) -> 'SUnitSolution':
        return SUnitSolution(self.mu, self.lam, self.mu_exponents, self.lam_exponents)

    def to_record(self, orbit_id: int | None = None) -> dict[str, Any]:
        """ Return the JSON line of the solution. """
        return {
            'lambda': format_coords(self.lam.coords),
            'mu': format_coords(self.mu.coords),
            'exponents': list(self.lam_exponents) if self.lam_exponents is not None else None,
            'mu_exponents': list(self.mu_exponents) if self.mu_exponents is not None else None,
            'orbit_id': orbit_id,
        }


@dataclass(frozen=True)
class SolutionSet:
    """
    The class holds the solutions found in an exponent box.

    Attributes:
        field: The number field.
        primes: The primes of S.
        solutions: The solutions, ordered by the exponent vector of lambda.
        bound: The exponent bound searched.
        complete: Whether a search over a box grown by the completeness factor found nothing new.
        elapsed: Seconds spent, the completeness run included.
        candidates: The number of exponent vectors searched.
        survivors: The number of sieve survivors verified exactly.
    """
    field: Field
    primes: tuple[PrimeIdealData, ...]
    solutions: tuple[SUnitSolution, ...]
    bound: int
    complete: bool = False
    elapsed: float = 0.0
    candidates: int = 0
    survivors: int = 0
    obstructed: bool = False

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self) -> Iterator[SUnitSolution]:
        return iter(self.solutions)

    def lambdas(self) -> set[FieldElement]:
        return {s.lam for s in self.solutions}

    def records(self, orbit_ids: Mapping[FieldElement, int] | None = None) -> list[dict[str, Any]]:
        """ Return the JSON lines, tagging each solution with the id of its orbit. """
        orbit_ids = orbit_ids or {}
        return [s.to_record(orbit_ids.get(s.lam)) for s in self.solutions]

    def summary(self) -> dict[str, Any]:
        return {
            'field': self.field.label,
            'S': [P.label for P in self.primes],
            'bound': self.bound,
            'count': len(self.solutions),
            'complete': self.complete,
            'obstructed': self.obstructed,
            'candidates': self.candidates,
            'survivors': self.survivors,
            'elapsed': round(self.elapsed, 3),
        }


class ObstructionKind(Enum):
    """
    The class defines the criteria that rule out every solution.

    Attributes:
        DEGREE_ONE_PRIME_ABOVE_2: A prime above 2 with residue field F_2, and S has odd residue characteristics.
        THREE_SPLITS_COMPLETELY: S is empty, 3 splits completely, and 3 does not divide the degree.
        TOTALLY_RAMIFIED_L: S is empty, K/Q is Galois of degree l^k with l >= 5, and l is totally ramified.
    """
    DEGREE_ONE_PRIME_ABOVE_2 = 'degree-1-prime-above-2'
    THREE_SPLITS_COMPLETELY = 'three-splits-completely'
    TOTALLY_RAMIFIED_L = 'totally-ramified-l'


@dataclass(frozen=True)
class Obstruction:
    kind: ObstructionKind
    applicable: bool
    certificate: str = ''


@dataclass(frozen=True)
class ObstructionReport:
    """ The class collects the evaluated obstructions of a (field, S) pair. """
    obstructions: tuple[Obstruction, ...]

    @property
    def applies(self) -> bool:
        return any(o.applicable for o in self.obstructions)

    def to_dict(self) -> dict[str, Any]:
        return {
            'applies': self.applies,
            'obstructions': [
                {'name': o.kind.value, 'applicable': o.applicable, 'certificate': o.certificate}
                for o in self.obstructions
            ],
        }


def _prime_power_base(n: int) -> int | None:
    for l in range(2, n + 1):
        if n % l == 0:
            while n % l == 0:
                n //= l
            return l if n == 1 else None
    return None


def obstructions(field: Field, primes: tuple[PrimeIdealData, ...] | list[PrimeIdealData]) -> ObstructionReport:
    """
    Evaluate the criteria that force the unit equation to have no solution.

    :param field: The number field.
    :param primes: The primes of S.
    :return: The report.
    """
    n = field.degree
    found = []

    try:
        above_2 = field.factor_rational_prime(2)
    except UnsupportedFieldError:
        above_2 = []
    degree_one = [P for P in above_2 if P.f == 1]
    odd_s = all(P.p != 2 for P in primes)
    found.append(Obstruction(
        ObstructionKind.DEGREE_ONE_PRIME_ABOVE_2,
        bool(degree_one) and odd_s,
        f'{degree_one[0].label} has residue field F_2' if degree_one and odd_s else '',
    ))

    try:
        above_3 = field.factor_rational_prime(3)
    except UnsupportedFieldError:
        above_3 = []
    splits = len(above_3) == n and all(P.e == 1 and P.f == 1 for P in above_3)
    applicable = not primes and splits and n % 3 != 0
    found.append(Obstruction(
        ObstructionKind.THREE_SPLITS_COMPLETELY,
        applicable,
        f'3 splits into {n} primes of degree 1' if applicable else '',
    ))

    l = _prime_power_base(n) if n > 1 else None
    applicable, certificate = False, ''
    if not primes and l is not None and l >= 5 and field.descriptor.galois:
        try:
            above_l = field.factor_rational_prime(l)
        except UnsupportedFieldError:
            above_l = []
        if len(above_l) == 1 and above_l[0].e == n:
            applicable, certificate = True, f'{l} is totally ramified in a Galois {l}-extension'
    found.append(Obstruction(ObstructionKind.TOTALLY_RAMIFIED_L, applicable, certificate))
    return ObstructionReport(tuple(found))


def _norm_matches(group: SUnitGroup, lam: FieldElement, mu: FieldElement) -> bool:
    """ Decide whether mu = 1 - lambda is an S-unit, given that lambda is one. """
    field = group.field
    expected = Fraction(1)
    for P in group.primes:
        expected *= Fraction(P.norm) ** field.valuation(mu, P)
    return abs(field.norm(mu)) == expected


def _s3_images(group: SUnitGroup, sol: SUnitSolution) -> list[SUnitSolution]:
    """ Return the six images of a solution under lambda -> 1 - lambda and lambda -> 1 / lambda. """
    lam, mu = sol.lam, sol.mu
    vl, vm = sol.lam_exponents, sol.mu_exponents
    inv_l, inv_m = group.neg(vl), group.neg(vm)
    # -mu / lambda and -lambda / mu
    ratio_l = group.add(group.minus_one, group.add(vm, inv_l))
    ratio_m = group.add(group.minus_one, group.add(vl, inv_m))
    one = group.field.one
    pairs = [
        (lam, mu, vl, vm),
        (mu, lam, vm, vl),
        (one / lam, -mu / lam, inv_l, ratio_l),
        (-mu / lam, one / lam, ratio_l, inv_l),
        (one / mu, -lam / mu, inv_m, ratio_m),
        (-lam / mu, one / mu, ratio_m, inv_m),
    ]
    return [SUnitSolution(*p) for p in pairs]


def _search_box(group: SUnitGroup, bound: int, threads: int, search_cap: int) -> tuple[dict, int, int]:
    candidates = (2 * bound + 1) ** group.rank * group.w
    if candidates > search_cap:
        raise ResourceError(f'search box of {candidates} candidates exceeds the cap {search_cap}')

    start = time.perf_counter()
    survivors = sieve_box(group.sieve_data(bound), threads)
    console.info(f'bound {bound}: {candidates} candidates, {len(survivors)} sieve survivors '
                 f'({time.perf_counter() - start:.2f}s)')

    found: dict[FieldElement, SUnitSolution] = {}
    by_element: dict[FieldElement, ExponentVector] = {}
    verified = []
    for v in survivors:
        lam = group.unfold(v)
        mu = 1 - lam
        if mu.is_zero() or not _norm_matches(group, lam, mu):
            continue
        by_element[lam] = v
        verified.append((lam, mu, v))

    for lam, mu, v in verified:
        vm = by_element.get(mu)
        if vm is None:
            vm = group.fold(mu)
        for image in _s3_images(group, SUnitSolution(lam, mu, v, vm)):
            found.setdefault(image.lam, image)
    return found, candidates, len(survivors)


def solve(group: SUnitGroup, bound: int, *, threads: int = 1, search_cap: int = 2 * 10 ** 8,
          completeness_factor: float = 1.5, check_completeness: bool = True) -> SolutionSet:
    """
    Find every solution of lambda + mu = 1 whose lambda lies in the exponent box, closed under S3.

    Every free exponent of lambda ranges over [-bound, bound] and the torsion
    exponent over [0, w). The result is closed under lambda -> 1 - lambda and
    lambda -> 1 / lambda, so it only grows with the bound.

    :param group: The S-unit group.
    :param bound: The exponent bound.
    :param threads: The number of sieve worker processes.
    :param search_cap: The largest admissible number of candidates.
    :param completeness_factor: The growth of the bound for the completeness check.
    :param check_completeness: Whether to run the completeness check.
    :return: The solution set.
    """
    if bound < 1:
        raise PreconditionError(f'bound must be positive, got {bound}')
    start = time.perf_counter()

    report = obstructions(group.field, group.primes)
    if report.applies:
        names = [o.kind.value for o in report.obstructions if o.applicable]
        console.info(f'{group.field.label}: no solutions, obstructed by {", ".join(names)}')
        return SolutionSet(group.field, group.primes, (), bound, complete=True, obstructed=True,
                           elapsed=time.perf_counter() - start)

    found, candidates, survivors = _search_box(group, bound, threads, search_cap)

    complete = False
    if check_completeness:
        larger = math.ceil(bound * completeness_factor)
        if larger > bound:
            try:
                grown, _, _ = _search_box(group, larger, threads, search_cap)
                complete = grown.keys() == found.keys()
                if not complete:
                    console.warning(f'bound {larger} finds {len(grown) - len(found)} solutions more than bound {bound}')
            except ResourceError as e:
                console.warning(f'completeness check skipped: {e}')

    solutions = tuple(sorted(found.values(), key=lambda s: s.lam_exponents))
    elapsed = time.perf_counter() - start
    console.info(f'{group.field.label}: {len(solutions)} solutions at bound {bound}, '
                 f'complete = {complete} ({elapsed:.2f}s)')
    return SolutionSet(group.field, group.primes, solutions, bound, complete, elapsed, candidates, survivors)


def solve_for_primes(field: Field, primes: tuple[PrimeIdealData, ...] | list[PrimeIdealData], bound: int, *,
                     threads: int = 1, search_cap: int = 2 * 10 ** 8, completeness_factor: float = 1.5,
                     check_completeness: bool = True, **group_options: int) -> SolutionSet:
    """
    Solve the S-unit equation for a field and S, building the group only when no obstruction applies.

    :param group_options: Passed to ``build_sunit_group``.
    """
    primes = tuple(primes)
    if obstructions(field, primes).applies:
        console.info(f'{field.label}: no solutions, the unit equation is obstructed')
        return SolutionSet(field, primes, (), bound, complete=True, obstructed=True)
    group = build_sunit_group(field, primes, **group_options)
    return solve(group, bound, threads=threads, search_cap=search_cap,
                 completeness_factor=completeness_factor, check_completeness=check_completeness)


def verify_solution(field: Field, primes: tuple[PrimeIdealData, ...] | list[PrimeIdealData],
                    lam: FieldElement) -> bool:
    """
    Return whether lambda and 1 - lambda are both S-units.

    :raises DomainError: If lambda is 0 or 1.
    """
    if lam.is_zero() or lam == 1:
        raise DomainError('lambda must differ from 0 and 1')
    return is_sunit(field, primes, lam) and is_sunit(field, primes, 1 - lam)


def m_value(sol: SUnitSolution, prime: PrimeIdealData) -> int:
    """ Return max(|ord_P lambda|, |ord_P mu|). """
    return max(abs(prime.ord(sol.lam)), abs(prime.ord(sol.mu)))


def descent_step(sol: SUnitSolution, prime: PrimeIdealData, delta: FieldElement,
                 group: SUnitGroup | None = None) -> SUnitSolution:
    """
    Map a solution with mu = delta^2 to a new solution.

    With lambda_1 = 1 + delta and lambda_2 = 1 - delta the new solution is
    lambda' = lambda_1^2 / lambda_2^2 and mu' = -4 delta / lambda_2^2. When
    ord_P(mu) = 0 and m = ord_P(lambda) > 2 ord_P(2), the new m is
    2 m - 4 ord_P(2).

    :param sol: A solution whose mu is the square of delta.
    :param prime: The prime P above 2 tracked by the step.
    :param delta: The square root of mu.
    :param group: The S-unit group, to attach exponent vectors. Without it the step is
        pure field arithmetic and the result need not be an S-unit solution.
    :return: The new solution.
    :raises PreconditionError: If group is given and delta is not one of its S-units,
        or a prime above 2 is missing from its S.
    """
    if delta * delta != sol.mu:
        raise PreconditionError(f'mu = {sol.mu} is not the square of {delta}')
    if prime.p != 2:
        raise PreconditionError(f'{prime.label} does not lie above 2')
    if group is not None:
        labels = {P.label for P in group.primes}
        missing = [P.label for P in group.field.factor_rational_prime(2) if P.label not in labels]
        if missing:
            raise PreconditionError(f'S lacks the primes {missing} above 2')
        if not is_sunit(group.field, group.primes, delta):
            raise PreconditionError(f'{delta} is not an S-unit')
    lam_1, lam_2 = 1 + delta, 1 - delta
    if lam_1.is_zero() or lam_2.is_zero():
        raise DomainError('delta must differ from 1 and -1')
    denominator = lam_2 * lam_2
    lam = lam_1 * lam_1 / denominator
    mu = -4 * delta / denominator
    if group is None:
        return SUnitSolution(lam, mu)
    return SUnitSolution(lam, mu, group.fold(lam), group.fold(mu))
