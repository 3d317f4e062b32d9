# -*- coding: utf-8 -*-
"""
The group of S-units with exponent-vector coordinates.

An element is written zeta^t * g_1^e_1 * ... * g_r^e_r where zeta generates the
roots of unity and g_1, ..., g_r are the fundamental units followed by one
generator per prime of S. The S generators come from the lattice of exponent
vectors v with prod P^v principal, kept in lower triangular form.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt, prod

from sympy import factorint

from model.errors import DomainError, NotInGroupError, ResourceError, UnsupportedFieldError
from model.field import Field, FieldElement, FieldKind, PrimeIdealData
from model.quadratic import discriminant, omega_relation
from model.residue import ResidueMap, SieveData, auxiliary_maps, match_units

try:
    from ui.rich_cli import console
except ModuleNotFoundError:
    from ui.cli import console

__all__ = [
    'ExponentVector',
    'SUnitGroup',
    'build_sunit_group',
    'evertse_bound',
    'is_sunit',
]

type ExponentVector = tuple[int, ...]


def is_sunit(field: Field, primes: tuple[PrimeIdealData, ...] | list[PrimeIdealData], a: FieldElement) -> bool:
    """
    Decide whether ord_Q(a) = 0 for every prime Q outside S.

    The element is scaled to b = d * a with d its coordinate denominator. Primes
    above a divisor of d that S does not cover are checked directly; what is left
    is decided by comparing |N(b)| with the part of it that S and d account for.

    :param field: The number field.
    :param primes: The primes of S.
    :param a: The element.
    :return: Whether a is an S-unit; zero is not.
    """
    if a.is_zero():
        return False
    n = field.degree
    d = field.denominator(a)
    b = a * d

    expected = 1
    for q, k in factorint(d).items():
        inside = [P for P in primes if P.p == q]
        covered = sum(P.e * P.f for P in inside)
        if covered != n:
            for Q in field.factor_rational_prime(q):
                if Q not in inside and field.valuation(a, Q) != 0:
                    return False
        expected *= q ** (k * (n - covered))

    s_part = prod(Fraction(P.norm) ** field.valuation(b, P) for P in primes)
    return abs(field.norm(b)) == s_part * expected


def evertse_bound(field: Field, primes: tuple[PrimeIdealData, ...] | list[PrimeIdealData]) -> int:
    """ Return 3 * 7^(3 r1 + 4 r2 + 2 #S), the bound on the number of solutions. """
    r1, r2 = field.signature
    return 3 * 7 ** (3 * r1 + 4 * r2 + 2 * len(primes))


@dataclass(frozen=True)
class SUnitGroup:
    """
    The class represents O_S^* with its coordinates.

    Attributes:
        field: The number field.
        primes: The primes of S.
        torsion: The generator zeta of the roots of unity.
        w: The order of zeta.
        units: The fundamental units.
        s_generators: One generator per prime of S.
        relations: ``relations[i]`` is the valuation vector of the i-th S generator;
            the matrix is lower triangular with positive diagonal.
        maps: The auxiliary residue maps used by fold and the solver.
        fold_window: The unit exponent window of fold.
    """
    field: Field
    primes: tuple[PrimeIdealData, ...]
    torsion: FieldElement
    w: int
    units: tuple[FieldElement, ...]
    s_generators: tuple[FieldElement, ...]
    relations: tuple[tuple[int, ...], ...]
    maps: tuple[ResidueMap, ...]
    fold_window: int = 64

    @property
    def generators(self) -> tuple[FieldElement, ...]:
        return self.units + self.s_generators

    @property
    def rank(self) -> int:
        return len(self.units) + len(self.s_generators)

    @property
    def valuation_matrix(self) -> tuple[tuple[int, ...], ...]:
        """ Return the r x #S matrix of ord_P(g_i). """
        zero = (0,) * len(self.primes)
        return (zero,) * len(self.units) + self.relations

    @property
    def minus_one(self) -> ExponentVector:
        return (self.w // 2,) + (0,) * self.rank

    @property
    def identity(self) -> ExponentVector:
        return (0,) * (self.rank + 1)

    def add(self, v: ExponentVector, u: ExponentVector) -> ExponentVector:
        """ Return the exponent vector of the product. """
        return ((v[0] + u[0]) % self.w,) + tuple(a + b for a, b in zip(v[1:], u[1:]))

    def neg(self, v: ExponentVector) -> ExponentVector:
        """ Return the exponent vector of the inverse. """
        return (-v[0] % self.w,) + tuple(-a for a in v[1:])

    def unfold(self, v: ExponentVector) -> FieldElement:
        """
        Evaluate an exponent vector.

        :param v: The vector (t, e_1, ..., e_r).
        :return: zeta^t * prod g_i^e_i.
        """
        if len(v) != self.rank + 1:
            raise DomainError(f'expected {self.rank + 1} exponents, got {len(v)}')
        result = self.torsion ** (v[0] % self.w)
        for g, e in zip(self.generators, v[1:]):
            if e:
                result = result * g ** e
        return result

    def contains(self, a: FieldElement) -> bool:
        return is_sunit(self.field, self.primes, a)

    def _solve_valuations(self, a: FieldElement) -> list[int]:
        """ Solve the triangular system for the exponents of the S generators. """
        target = [self.field.valuation(a, P) for P in self.primes]
        exponents = [0] * len(self.primes)
        for i in reversed(range(len(self.primes))):
            row = self.relations[i]
            if target[i] % row[i]:
                raise NotInGroupError(f'{a} has valuations {target} outside the relation lattice')
            c = target[i] // row[i]
            exponents[i] = c
            target = [x - c * y for x, y in zip(target, row)]
        return exponents

    def fold(self, a: FieldElement) -> ExponentVector:
        """
        Find the exponent vector of an S-unit.

        The valuations at S fix the exponents of the S generators; the remaining
        unit is matched against the unit generators by residues over growing
        windows and confirmed exactly.

        :param a: The element.
        :return: Its exponent vector.
        :raises NotInGroupError: If a is not an S-unit or its unit part lies outside the fold window.
        """
        if not self.contains(a):
            raise NotInGroupError(f'{a} is not an S-unit')
        s_exponents = self._solve_valuations(a)
        unit = a
        for g, c in zip(self.s_generators, s_exponents):
            if c:
                unit = unit / g ** c

        window = 2 if self.units else 0
        while True:
            for candidate in match_units(self.maps, self.torsion, self.w, self.units, unit, window):
                v = candidate + tuple(s_exponents)
                if self.unfold(candidate + (0,) * len(self.s_generators)) == unit:
                    return v
            if window >= self.fold_window or not self.units:
                break
            window = min(2 * window, self.fold_window)
        raise NotInGroupError(f'the unit part of {a} lies outside the window {self.fold_window}')

    def sieve_data(self, bound: int) -> SieveData:
        """ Return the residue images the solver sieve needs for an exponent box. """
        return SieveData(
            w=self.w,
            bound=bound,
            maps=self.maps,
            torsion_images=tuple(m.images_of(self.torsion) for m in self.maps),
            generator_images=tuple(tuple(m.images_of(g) for g in self.generators) for m in self.maps),
            valuations=self.valuation_matrix,
            prime_norms=tuple(P.norm for P in self.primes),
        )


def _search_bound(field: Field, m: int) -> int:
    """ Bound |y| for a generator x + y*w of norm +-m, up to units. """
    d = field.d
    disc = discriminant(d)
    if d < 0:
        return isqrt(4 * m // -disc) + 1
    x, y = field.fundamental_unit().coords
    epsilon = int(abs(x) + abs(y) * (isqrt(d) + 1)) + 1
    return isqrt(4 * m * epsilon // disc) + 1


def _quadratic_generator(field: Field, support: dict[PrimeIdealData, int], cap: int) -> FieldElement | None:
    """
    Search a generator of prod P^v among the elements of norm +-N(I).

    :return: A generator, or None when the ideal is not principal.
    """
    m = prod(P.norm ** v for P, v in support.items())
    if m == 1:
        return field.one
    t, n = omega_relation(field.d)
    bound = _search_bound(field, m)
    if 2 * bound + 1 > cap:
        raise ResourceError(f'generator search range {2 * bound + 1} exceeds the cap {cap}')

    checks = []
    for p in sorted(factorint(m)):
        for Q in field.factor_rational_prime(p):
            checks.append((Q, support.get(Q, 0)))

    for y in sorted(range(-bound, bound + 1), key=lambda v: (abs(v), v)):
        for sign in (1, -1):
            disc = t * t * y * y + 4 * (n * y * y + sign * m)
            if disc < 0:
                continue
            s = isqrt(disc)
            if s * s != disc:
                continue
            for root in sorted({s, -s}, reverse=True):
                if (root - t * y) % 2:
                    continue
                alpha = field.element([(root - t * y) // 2, y])
                if all(field.valuation(alpha, Q) == v for Q, v in checks):
                    return alpha
    return None


def _principal_generator(field: Field, support: dict[PrimeIdealData, int], cap: int) -> FieldElement | None:
    match field.kind:
        case FieldKind.RATIONAL:
            return field.from_rational(prod(P.p ** v for P, v in support.items()))
        case FieldKind.QUADRATIC:
            return _quadratic_generator(field, support, cap)
    result = field.one
    for P, v in support.items():
        if P.generator is None:
            raise UnsupportedFieldError(f'{P.label} carries no generator fixture')
        result = result * field.element(P.generator) ** v
    return result


def _relation_lattice(field: Field, primes: tuple[PrimeIdealData, ...], h: int, cap: int
                      ) -> tuple[tuple[FieldElement, ...], tuple[tuple[int, ...], ...]]:
    generators, relations = [], []
    diagonal: list[int] = []
    for i, P in enumerate(primes):
        found = None
        for k in range(1, h + 1):
            for prefix in product(*(range(kj) for kj in diagonal)):
                support = {Q: v for Q, v in zip(primes, prefix + (k,)) if v}
                alpha = _principal_generator(field, support, cap)
                if alpha is not None:
                    found = alpha, prefix + (k,)
                    break
            if found:
                break
        if found is None:
            raise UnsupportedFieldError(f'no principal power of {P.label} up to the class number {h}')
        alpha, row = found
        generators.append(alpha)
        relations.append(row + (0,) * (len(primes) - i - 1))
        diagonal.append(row[-1])
    return tuple(generators), tuple(relations)


def build_sunit_group(field: Field, primes: tuple[PrimeIdealData, ...] | list[PrimeIdealData], *,
                      aux_primes: int = 6, fold_window: int = 64, class_number_cap: int = 10 ** 6,
                      generator_search_cap: int = 2 * 10 ** 6) -> SUnitGroup:
    """
    Construct O_S^* for a field and a set of primes.

    :param field: The number field.
    :param primes: The primes of S, without repetition.
    :param aux_primes: The number of auxiliary residue primes.
    :param fold_window: The unit exponent window of fold.
    :param class_number_cap: The discriminant cap of the class number computation.
    :param generator_search_cap: The cap on the generator search range.
    :return: The group.
    """
    primes = tuple(primes)
    if len(set(primes)) != len(primes):
        raise DomainError('S contains a prime twice')

    h = field.class_number(class_number_cap) if primes and field.kind is FieldKind.QUADRATIC else 1
    s_generators, relations = _relation_lattice(field, primes, h, generator_search_cap)
    units = field.unit_generators()
    torsion, w = field.torsion()

    r1, r2 = field.signature
    rank = len(units) + len(s_generators)
    if rank != r1 + r2 - 1 + len(primes):
        raise UnsupportedFieldError(f'rank {rank} differs from r1 + r2 + #S - 1 = {r1 + r2 - 1 + len(primes)}')
    if w % 2:
        raise UnsupportedFieldError(f'torsion order {w} is odd')
    for u in units:
        if abs(field.norm(u)) != 1:
            raise UnsupportedFieldError(f'unit generator {u} has norm {field.norm(u)}')
    for g in s_generators:
        if not is_sunit(field, primes, g):
            raise UnsupportedFieldError(f'S generator {g} is not an S-unit')

    exclude = {P.p for P in primes}
    maps = auxiliary_maps(field, aux_primes, exclude)
    console.debug(f'S-unit group of {field.label}: rank {rank}, w = {w}, '
                  f'relations {list(relations)}, auxiliary primes {[m.q for m in maps]}')
    return SUnitGroup(field, primes, torsion, w, units, s_generators, relations, maps, fold_window)
