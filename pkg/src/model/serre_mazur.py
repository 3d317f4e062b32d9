# -*- coding: utf-8 -*-
"""
Exponent bounds for x^p + y^p + L^r z^p = 0 over Q from the newforms of level 2L.

A solution gives a Frey curve whose mod p representation arises from a weight 2
newform f of level 2L. Comparing traces at a probe prime l not dividing 2L
forces p to divide B_l = |Norm(beta_l)| when c_l(f) is irrational, or gamma_l
when f is rational and corresponds to a curve with full 2-torsion.
"""
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt, prod
from typing import Any

from sympy import factorint, isprime, primerange, resultant

from model.errors import PreconditionError
from model.field import FieldDescriptor, make_field
from model.newform import NewformRecord, _x
from model.solver import solve
from model.sunit import build_sunit_group

__all__ = [
    'BoundStatus',
    'Classification',
    'ExponentBound',
    'FormContribution',
    'FreyArrangement',
    'beta_bound',
    'classify_conductor_2L',
    'default_probe_primes',
    'exponent_bound_for_L',
    'frey_arrangement',
    'gamma_bound',
    'hasse_interval',
    't_set',
]

SMALL_EXCEPTIONS = frozenset({3, 5, 7, 17})
TRIVIAL_SOLUTION_REASON = 'trivial solution (1,1,-1,1)'


@dataclass(frozen=True)
class FreyArrangement:
    """
    The class holds the terms of a Frey curve Y^2 = X(X - A)(X + B).

    Attributes:
        A: The odd term, congruent to -1 mod 4.
        B: The even term.
        C: The remaining term.
        flipped: Whether all signs were changed.
    """
    A: int
    B: int
    C: int
    flipped: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {'A': self.A, 'B': self.B, 'C': self.C, 'flipped': self.flipped}


def frey_arrangement(x_term: int, y_term: int, z_term: int) -> FreyArrangement:
    """
    Arrange a coprime triple with zero sum so that A = -1 mod 4 and B is even.

    :return: The arrangement; all signs are flipped when both odd terms are 1 mod 4.
    :raises PreconditionError: If the triple is not coprime, has a nonzero sum or no even term.
    """
    terms = (x_term, y_term, z_term)
    if 0 in terms or sum(terms) != 0:
        raise PreconditionError(f'{terms} must be nonzero and sum to 0')
    if gcd(x_term, y_term) != 1 or gcd(y_term, z_term) != 1 or gcd(x_term, z_term) != 1:
        raise PreconditionError(f'{terms} is not pairwise coprime')
    even = [t for t in terms if t % 2 == 0]
    if len(even) != 1:
        raise PreconditionError(f'{terms} must have exactly one even term')

    flipped = False
    odd = [t for t in terms if t % 2]
    if all(t % 4 == 1 for t in odd):
        odd, even, flipped = [-t for t in odd], [-even[0]], True
    i = next(i for i, t in enumerate(odd) if t % 4 == 3)
    return FreyArrangement(odd[i], even[0], odd[1 - i], flipped)


def _check_prime(l: int) -> None:
    if not isprime(l):
        raise PreconditionError(f'{l} is not prime')


def hasse_interval(l: int) -> range:
    """ Return the integers a with a^2 <= 4 l. """
    _check_prime(l)
    r = isqrt(4 * l)
    return range(-r, r + 1)


def t_set(l: int) -> list[int]:
    """ Return the a in the Hasse interval with a = l + 1 mod 4. """
    return [a for a in hasse_interval(l) if (a - l - 1) % 4 == 0]


def beta_bound(l: int, form: NewformRecord) -> int:
    """
    Return B_l = |Norm(l (l + 1 - c_l)(l + 1 + c_l) prod_a (a - c_l))| over the Hasse interval.

    The norm is the resultant of the minimal polynomial of the eigenvalue field
    with beta_l as a polynomial in its generator.

    :param l: A probe prime.
    :param form: The newform.
    :return: B_l, zero exactly when c_l is a rational integer.
    """
    c = form.eigenvalue(l).as_expr()
    beta = l * (l + 1 - c) * (l + 1 + c)
    for a in hasse_interval(l):
        beta *= a - c
    return abs(int(resultant(form.minimal_polynomial.as_expr(), beta, _x)))


def gamma_bound(l: int, a_l: int) -> int:
    """
    Return |l (l + 1 - a_l)(l + 1 + a_l) prod_{a in T_l} (a - a_l)|.

    :raises PreconditionError: If a_l lies outside the Hasse interval.
    """
    if a_l not in hasse_interval(l):
        raise PreconditionError(f'a_{l} = {a_l} violates the Hasse bound')
    return abs(l * (l + 1 - a_l) * (l + 1 + a_l) * prod(a - a_l for a in t_set(l)))


class Classification(Enum):
    """ The class defines whether a curve over Q with full 2-torsion and conductor 2L exists. """
    CURVE_EXISTS = 'curve-exists'
    NO_CURVE = 'no-curve'


def _relation(lam: Fraction) -> tuple[int, int, int]:
    """ Write lambda + mu = 1 as u + v = w with positive coprime integers, u <= v. """
    a, c = lam.numerator, lam.denominator
    b = c - a
    terms = [a, b, -c]
    signs = [t > 0 for t in terms]
    majority = signs.count(True) >= 2
    same = sorted(abs(t) for t, s in zip(terms, signs) if s == majority)
    other = next(abs(t) for t, s in zip(terms, signs) if s != majority)
    return same[0], same[1], other


def classify_conductor_2L(L: int, bound: int = 10) -> tuple[Classification, str | None]:
    """
    Decide whether an elliptic curve over Q with full 2-torsion and conductor 2L exists.

    The {2, L}-unit equation is solved; a solution where L divides one of the
    terms gives the curve, except for L in {3, 5, 7, 17}, where the exponent of 2
    in the conductor is not 1.

    :param L: An odd prime.
    :param bound: The exponent bound of the search.
    :return: The classification and the witnessing relation ``u+v=w``.
    """
    if L == 2 or not isprime(L):
        raise PreconditionError(f'{L} is not an odd prime')
    rationals = make_field(FieldDescriptor.rational())
    primes = tuple(rationals.factor_rational_prime(2) + rationals.factor_rational_prime(L))
    group = build_sunit_group(rationals, primes)
    solutions = solve(group, bound, check_completeness=False)

    witnesses = []
    for sol in solutions:
        lam = sol.lam.coords[0]
        if (lam.numerator * lam.denominator * (lam.denominator - lam.numerator)) % L == 0:
            witnesses.append(_relation(lam))
    if not witnesses or L in SMALL_EXCEPTIONS:
        return Classification.NO_CURVE, None
    u, v, w = min(witnesses, key=lambda t: (t[2], t[0]))
    return Classification.CURVE_EXISTS, f'{u}+{v}={w}'


class BoundStatus(Enum):
    """
    The class defines the outcome of bounding the exponent.

    Attributes:
        BOUNDED: Every form contributes a bound or is eliminated.
        EMPTY_LEVEL: There are no newforms at level 2L.
        UNBOUNDED: A rational form corresponds to a curve, so the method gives no bound.
    """
    BOUNDED = 'bounded'
    EMPTY_LEVEL = 'empty-level'
    UNBOUNDED = 'unbounded-rational-obstruction'


@dataclass(frozen=True)
class FormContribution:
    """
    The class records what one newform contributes to the bound.

    Attributes:
        label: The label of the form.
        rational: Whether the eigenvalue field is Q.
        values: Map l -> B_l (irrational form) or gamma_l (rational form).
        gcd: The gcd of the nonzero values, or None.
        eliminated: Whether the form was ruled out by the conductor 2L classification.
    """
    label: str
    rational: bool
    values: dict[int, int]
    gcd: int | None
    eliminated: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            'label': self.label,
            'rational': self.rational,
            'values': {
                str(l): {'value': v, 'factors': {str(p): k for p, k in factorint(v).items()} if v else {}}
                for l, v in sorted(self.values.items())
            },
            'gcd': self.gcd,
            'eliminated': self.eliminated,
        }


@dataclass(frozen=True)
class ExponentBound:
    """
    The class represents the bound on the exponent p for one L.

    Attributes:
        L: The prime L.
        status: Whether the exponent is bounded.
        bound: The largest prime dividing a form's contribution, when bounded.
        contributions: One entry per newform of level 2L.
        reason: A remark on the status.
    """
    L: int
    status: BoundStatus
    bound: int | None = None
    contributions: tuple[FormContribution, ...] = ()
    reason: str = ''
    witness: str | None = field(default=None, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            'L': self.L,
            'status': self.status.value,
            'bound': self.bound,
            'reason': self.reason,
            'witness': self.witness,
            'forms': [c.to_dict() for c in self.contributions],
        }


def default_probe_primes(L: int, count: int = 10) -> list[int]:
    """ Return the first primes l not dividing 2L. """
    result = []
    for l in primerange(3, 10 ** 6):
        if l != L:
            result.append(l)
        if len(result) == count:
            break
    return result


def exponent_bound_for_L(L: int, forms: list[NewformRecord], probes: list[int] | None = None,
                         *, classify: Callable[[int], tuple[Classification, str | None]] = classify_conductor_2L
                         ) -> ExponentBound:
    """
    Bound the exponent p of x^p + y^p + L^r z^p = 0 from the newforms of level 2L.

    Irrational forms contribute the gcd of their nonzero B_l. Rational forms
    contribute the gcd of their nonzero gamma_l; when every gamma_l vanishes, the
    form is eliminated unless a curve of conductor 2L exists, which leaves p
    unbounded.

    :param L: A prime.
    :param forms: The newforms of level 2L.
    :param probes: Probe primes l not dividing 2L; those without data are skipped.
    :param classify: The conductor 2L classification.
    :return: The bound.
    """
    if L == 2:
        return ExponentBound(L, BoundStatus.UNBOUNDED, reason=TRIVIAL_SOLUTION_REASON)
    _check_prime(L)
    if not forms:
        return ExponentBound(L, BoundStatus.EMPTY_LEVEL,
                             reason=f'no newforms of weight 2 and level {2 * L}: no solutions for p >= 5')
    probes = [l for l in (probes or default_probe_primes(L)) if (2 * L) % l]

    contributions = []
    witness = None
    for form in forms:
        available = [l for l in probes if l in form.eigenvalues]
        if not available:
            raise PreconditionError(f'{form.label} carries no eigenvalue at the probe primes {probes}')
        if form.is_rational:
            values = {l: gamma_bound(l, form.rational_eigenvalue(l)) for l in available}
        else:
            values = {l: beta_bound(l, form) for l in available}
        nonzero = [v for v in values.values() if v]
        if nonzero:
            contributions.append(FormContribution(form.label, form.is_rational, values, gcd(*nonzero)))
            continue
        classification, witness = classify(L)
        if classification is Classification.CURVE_EXISTS:
            contributions.append(FormContribution(form.label, True, values, None))
            return ExponentBound(L, BoundStatus.UNBOUNDED, None, tuple(contributions),
                                 reason=f'{form.label} corresponds to a curve of conductor {2 * L}', witness=witness)
        contributions.append(FormContribution(form.label, True, values, None, eliminated=True))

    primes = [p for c in contributions if c.gcd for p in factorint(c.gcd)]
    bound = max(primes) if primes else None
    if bound is not None:
        reason = 'largest prime dividing a form contribution'
    elif all(c.eliminated for c in contributions):
        reason = 'every form eliminated'
    else:
        reason = 'no prime divides the form contributions'
    return ExponentBound(L, BoundStatus.BOUNDED, bound, tuple(contributions), reason)
