# -*- coding: utf-8 -*-
"""
The S3 action on lambda-invariants and the Legendre curves Y^2 = X(X - 1)(X - lambda).
"""
from collections.abc import Iterable
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Any

from model.errors import DomainError
from model.field import FieldElement, PrimeIdealData, format_coords
from model.solver import SUnitSolution
from model.sunit import is_sunit

__all__ = [
    'LambdaOrbit',
    'LegendreCurve',
    'curve_from_solution',
    'j_invariant',
    'lambda_from_roots',
    'legendre_curve',
    'orbit_classes',
    'orbit_ids',
    'pot_good_outside',
    's3_images',
    's3_orbit',
]


def _check_lambda(lam: FieldElement) -> None:
    if lam.is_zero() or lam == 1:
        raise DomainError('lambda must differ from 0 and 1')


def s3_images(lam: FieldElement) -> tuple[FieldElement, ...]:
    """
    Return the images of lambda under the six maps, in a fixed order.

    The maps are lambda, 1/lambda, 1 - lambda, 1/(1 - lambda),
    lambda/(lambda - 1) and (lambda - 1)/lambda.
    """
    _check_lambda(lam)
    mu = 1 - lam
    return lam, 1 / lam, mu, 1 / mu, lam / (lam - 1), (lam - 1) / lam


def _key(a: FieldElement) -> tuple:
    return a.coords


@dataclass(frozen=True)
class LambdaOrbit:
    """
    The class represents an orbit of the S3 action.

    Attributes:
        representative: The least member in the order of coordinate vectors.
        members: The distinct members, in the same order.
        curve: The Legendre curve of the solution the orbit was found from, if any.
    """
    representative: FieldElement
    members: tuple[FieldElement, ...]
    curve: 'LegendreCurve | None' = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, lam: FieldElement) -> bool:
        return lam in self.members

    def report(self) -> dict[str, Any]:
        """ Return the JSON orbit report. """
        legendre = legendre_curve(self.representative)
        curve = self.curve or legendre
        return {
            'representative': format_coords(self.representative.coords),
            'members': [format_coords(m.coords) for m in self.members],
            'size': self.size,
            'j': format_coords(curve.j_invariant.coords),
            'legendre': [0, 1, format_coords(self.representative.coords)],
            'discriminant': format_coords(legendre.discriminant.coords),
        }


def s3_orbit(lam: FieldElement) -> LambdaOrbit:
    """
    Return the orbit of lambda.

    :param lam: lambda, not 0 or 1.
    :return: The orbit, of size 2, 3 or 6.
    """
    members = tuple(sorted(set(s3_images(lam)), key=_key))
    return LambdaOrbit(members[0], members)


@dataclass(frozen=True)
class LegendreCurve:
    """
    The class represents the curve Y^2 = X(X - 1)(X - lambda), which has full 2-torsion.

    Attributes:
        lam: lambda, not 0 or 1.
    """
    lam: FieldElement

    def __post_init__(self) -> None:
        _check_lambda(self.lam)

    @property
    def roots(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        field = self.lam.field
        return field.zero, field.one, self.lam

    @cached_property
    def a_invariants(self) -> tuple[FieldElement, ...]:
        """ Return (a1, a2, a3, a4, a6) of X^3 - (1 + lambda) X^2 + lambda X. """
        zero = self.lam.field.zero
        return zero, -(1 + self.lam), zero, self.lam, zero

    @cached_property
    def discriminant(self) -> FieldElement:
        """ Return 16 lambda^2 (lambda - 1)^2. """
        return 16 * self.lam * self.lam * (self.lam - 1) * (self.lam - 1)

    @cached_property
    def j_invariant(self) -> FieldElement:
        return j_invariant(self.lam)


def legendre_curve(lam: FieldElement) -> LegendreCurve:
    return LegendreCurve(lam)


def lambda_from_roots(a1: FieldElement, a2: FieldElement, a3: FieldElement) -> FieldElement:
    """
    Return (a3 - a1) / (a2 - a1), the lambda-invariant of Y^2 = (X - a1)(X - a2)(X - a3).

    :raises DomainError: If two roots coincide.
    """
    if a1 == a2 or a2 == a3 or a1 == a3:
        raise DomainError('the roots must be distinct')
    return (a3 - a1) / (a2 - a1)


def j_invariant(lam: FieldElement) -> FieldElement:
    """ Return 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (1 - lambda)^2). """
    _check_lambda(lam)
    core = lam * lam - lam + 1
    mu = 1 - lam
    return 256 * core * core * core / (lam * lam * mu * mu)


def pot_good_outside(lam: FieldElement, primes: tuple[PrimeIdealData, ...] | list[PrimeIdealData]) -> bool:
    """ Return whether lambda and 1 - lambda are S-units. """
    _check_lambda(lam)
    return is_sunit(lam.field, primes, lam) and is_sunit(lam.field, primes, 1 - lam)


def curve_from_solution(sol: SUnitSolution) -> LegendreCurve:
    return LegendreCurve(sol.lam)


def orbit_classes(solutions: Iterable[SUnitSolution]) -> list[LambdaOrbit]:
    """
    Partition the lambda values of a solution set into S3 orbits.

    :param solutions: Solutions over one field and one S.
    :return: The orbits, ordered by representative.
    """
    orbits: dict[FieldElement, LambdaOrbit] = {}
    seen: set[FieldElement] = set()
    for sol in solutions:
        if sol.lam in seen:
            continue
        orbit = replace(s3_orbit(sol.lam), curve=curve_from_solution(sol))
        orbits[orbit.representative] = orbit
        seen.update(orbit.members)
    return sorted(orbits.values(), key=lambda o: _key(o.representative))


def orbit_ids(orbits: list[LambdaOrbit]) -> dict[FieldElement, int]:
    """ Map every member of every orbit to the index of its orbit. """
    return {m: i for i, orbit in enumerate(orbits) for m in orbit.members}
