# -*- coding: utf-8 -*-
"""
Reduction of number field elements modulo auxiliary primes that split completely,
and the vectorised sieves built on top of it.

An auxiliary prime q splits completely in K when the characteristic polynomial
of a primitive integral element has n distinct roots modulo q; every root gives
a ring homomorphism O_K -> F_q. For an element a that is a unit at q, the
product of its n images is N(a) mod q.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice, product
from math import prod

import numpy as np
from sympy import Poly, Rational, primerange, symbols

from model.errors import DomainError, UnsupportedFieldError
from model.field import Field, FieldElement

__all__ = [
    'ResidueMap',
    'SieveData',
    'auxiliary_maps',
    'match_units',
    'sieve_box',
]

# largest inner block of the exponent box held in memory at once
_INNER_LIMIT = 1 << 18
_PRIME_LIMIT = 100_000


@dataclass(frozen=True)
class ResidueMap:
    """
    The class holds the homomorphisms O_K -> F_q for one auxiliary prime q.

    Attributes:
        q: The auxiliary prime.
        images: ``images[h][i]`` is the image of the i-th basis element under the h-th homomorphism.
    """
    q: int
    images: tuple[tuple[int, ...], ...]

    @property
    def homs(self) -> int:
        return len(self.images)

    def image(self, a: FieldElement, hom: int) -> int:
        """
        Reduce an element along one homomorphism.

        :param a: An element whose coordinate denominators are prime to q.
        :param hom: The homomorphism index.
        :return: The residue in [0, q).
        """
        q = self.q
        total = 0
        for c, b in zip(a.coords, self.images[hom]):
            if c:
                try:
                    total += c.numerator * b * pow(c.denominator, -1, q)
                except ValueError as e:
                    raise DomainError(f'{a} is not integral at {q}') from e
        return total % q

    def images_of(self, a: FieldElement) -> tuple[int, ...]:
        return tuple(self.image(a, h) for h in range(self.homs))

    def norm(self, a: FieldElement) -> int:
        """ Return N(a) mod q. """
        return prod(self.images_of(a)) % self.q


def _primitive_element(field: Field) -> tuple[list[int], list[list[Fraction]]]:
    """
    Find a primitive integral element and express the basis in its powers.

    :return: The integer characteristic polynomial (high to low) and the matrix
        C with basis element i equal to sum_k C[i][k] * gamma^k.
    """
    n = field.degree
    x = symbols('x')
    first = field.basis_element(1)
    candidates = [first] + [first + field.basis_element(j) * k for j in range(2, n) for k in (1, 2, 3)]
    for gamma in candidates:
        charpoly = field._domain_matrix(field.mult_matrix(gamma)).charpoly()
        chi = Poly([Rational(int(c.numerator), int(c.denominator)) for c in charpoly], x)
        if chi.gcd(chi.diff(x)).degree() != 0:
            continue
        powers, power = [], field.one
        for _ in range(n):
            powers.append(list(power.coords))
            power = power * gamma
        inverse = field._domain_matrix(powers).inv().to_list()
        conversion = [[Fraction(int(c.numerator), int(c.denominator)) for c in row] for row in inverse]
        return [int(c) for c in chi.all_coeffs()], conversion
    raise UnsupportedFieldError(f'no primitive element found among small basis combinations of {field.label}')


def _roots_mod(coeffs: list[int], q: int) -> list[int]:
    roots = []
    for r in range(q):
        value = 0
        for c in coeffs:
            value = (value * r + c) % q
        if not value:
            roots.append(r)
    return roots


def auxiliary_maps(field: Field, count: int, exclude: set[int], start: int = 11) -> tuple[ResidueMap, ...]:
    """
    Choose auxiliary primes splitting completely in the field.

    :param field: The number field.
    :param count: The number of primes wanted.
    :param exclude: Residue characteristics to skip.
    :param start: The smallest prime considered.
    :return: The residue maps, in increasing order of q.
    """
    if field.degree == 1:
        primes = (q for q in primerange(start, _PRIME_LIMIT) if q not in exclude)
        return tuple(ResidueMap(q, ((1,),)) for q in islice(primes, count))

    chi, conversion = _primitive_element(field)
    n = field.degree
    denominators = {c.denominator for row in conversion for c in row}
    maps = []
    for q in primerange(start, _PRIME_LIMIT):
        if q in exclude or any(den % q == 0 for den in denominators):
            continue
        roots = _roots_mod(chi, q)
        if len(roots) != n:
            continue
        images = tuple(
            tuple(
                sum(c.numerator * pow(c.denominator, -1, q) * pow(r, k, q) for k, c in enumerate(row)) % q
                for row in conversion
            )
            for r in roots
        )
        maps.append(ResidueMap(q, images))
        if len(maps) == count:
            return tuple(maps)
    raise UnsupportedFieldError(f'fewer than {count} completely split primes below {_PRIME_LIMIT} for {field.label}')


@dataclass(frozen=True)
class SieveData:
    """
    The class holds everything a sieve worker needs, in picklable form.

    Attributes:
        w: The order of the torsion generator.
        bound: The exponent bound B of the box.
        maps: The auxiliary residue maps.
        torsion_images: ``[map][hom]`` images of the torsion generator.
        generator_images: ``[map][generator][hom]`` images of the free generators.
        valuations: ``[generator][prime]`` valuations of the free generators at S.
        prime_norms: The absolute norms of the primes of S.
    """
    w: int
    bound: int
    maps: tuple[ResidueMap, ...]
    torsion_images: tuple[tuple[int, ...], ...]
    generator_images: tuple[tuple[tuple[int, ...], ...], ...]
    valuations: tuple[tuple[int, ...], ...]
    prime_norms: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.valuations)

    @property
    def width(self) -> int:
        return 2 * self.bound + 1

    def inner_count(self) -> int:
        """ Return how many trailing generators form the in-memory block. """
        m = 0
        while m < self.rank and self.width ** (m + 1) <= _INNER_LIMIT:
            m += 1
        return m

    def outer_points(self) -> list[tuple[int, ...]]:
        """ Return the outer points (t, e_1, ..., e_k) in lexicographic order. """
        k = self.rank - self.inner_count()
        axis = range(-self.bound, self.bound + 1)
        return list(product(range(self.w), *([axis] * k)))


def _power_table(x: int, bound: int, q: int) -> np.ndarray:
    return np.array([pow(x, e, q) for e in range(-bound, bound + 1)], dtype=np.int64)


def _membership_table(q: int, norms: tuple[int, ...]) -> np.ndarray:
    """
    Tabulate membership in +-<N(P) : P unknown> for every pattern of unknown primes.

    :return: A boolean array indexed by [pattern, residue].
    """
    table = np.zeros((1 << len(norms), q), dtype=bool)
    for pattern in range(1 << len(norms)):
        group = {1}
        for s, norm in enumerate(norms):
            if pattern >> s & 1:
                frontier = set(group)
                while frontier:
                    frontier = {g * norm % q for g in frontier} - group
                    group |= frontier
        for g in group:
            table[pattern, g] = True
            table[pattern, -g % q] = True
    return table


class _BoxSieve:
    """ The precomputed state of the residue sieve over one exponent box. """

    def __init__(self, data: SieveData) -> None:
        self.data = data
        self.m = data.inner_count()
        self.k = data.rank - self.m
        width, bound = data.width, data.bound

        size = width ** self.m
        digits = np.indices((width,) * self.m).reshape(self.m, size) if self.m else np.zeros((0, 1), dtype=np.int64)
        self.digits = digits.astype(np.int64)

        self.tables = [
            [[_power_table(gen[h], bound, rmap.q) for h in range(rmap.homs)] for gen in data.generator_images[mi]]
            for mi, rmap in enumerate(data.maps)
        ]
        first = data.maps[0]
        self.grid = np.ones((first.homs, self.digits.shape[1]), dtype=np.int64)
        for h in range(first.homs):
            for j in range(self.m):
                self.grid[h] = self.grid[h] * self.tables[0][self.k + j][h][self.digits[j]] % first.q

        exponents = self.digits - bound
        self.inner_ords = np.zeros((len(data.prime_norms), self.digits.shape[1]), dtype=np.int64)
        for s in range(len(data.prime_norms)):
            for j in range(self.m):
                self.inner_ords[s] += exponents[j] * data.valuations[self.k + j][s]

        self.membership = [_membership_table(rmap.q, data.prime_norms) for rmap in data.maps]
        self.norm_powers = [
            [np.array([pow(norm, e, rmap.q) for e in range(rmap.q - 1)], dtype=np.int64) for norm in data.prime_norms]
            for rmap in data.maps
        ]

    def _inner_images(self, mi: int, h: int, idx: np.ndarray) -> np.ndarray:
        q = self.data.maps[mi].q
        result = np.ones(idx.size, dtype=np.int64)
        for j in range(self.m):
            result = result * self.tables[mi][self.k + j][h][self.digits[j][idx]] % q
        return result

    def scan(self, points: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
        """
        Sieve the inner block below each outer point.

        :param points: Outer points (t, e_1, ..., e_k).
        :return: The surviving exponent vectors in lexicographic order.
        """
        data = self.data
        survivors = []
        everything = np.arange(self.digits.shape[1])
        for point in points:
            t, head = point[0], point[1:]
            base_ords = [sum(e * data.valuations[j][s] for j, e in enumerate(head)) for s in range(len(data.prime_norms))]
            idx = everything
            for mi, rmap in enumerate(data.maps):
                q = rmap.q
                norm = np.ones(idx.size, dtype=np.int64)
                for h in range(rmap.homs):
                    scalar = pow(data.torsion_images[mi][h], t, q)
                    for j, e in enumerate(head):
                        scalar = scalar * pow(data.generator_images[mi][j][h], e, q) % q
                    inner = self.grid[h][idx] if mi == 0 else self._inner_images(mi, h, idx)
                    norm = norm * ((1 - scalar * inner) % q) % q

                pattern = np.zeros(idx.size, dtype=np.int64)
                for s in range(len(data.prime_norms)):
                    ords = base_ords[s] + self.inner_ords[s][idx]
                    norm = norm * self.norm_powers[mi][s][(-np.minimum(ords, 0)) % (q - 1)] % q
                    pattern |= (ords == 0).astype(np.int64) << s
                idx = idx[self.membership[mi][pattern, norm]]
                if not idx.size:
                    break
            for i in idx.tolist():
                tail = tuple(int(self.digits[j][i]) - data.bound for j in range(self.m))
                survivors.append(point + tail)
        return survivors


_worker: _BoxSieve | None = None


def _init_worker(data: SieveData) -> None:
    global _worker
    _worker = _BoxSieve(data)


def _scan_chunk(points: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return _worker.scan(points)


def sieve_box(data: SieveData, threads: int = 1) -> list[tuple[int, ...]]:
    """
    Return the exponent vectors (t, e) in the box whose lambda may solve the unit equation.

    A vector survives when, modulo every auxiliary prime, the norm of 1 - lambda
    is compatible with 1 - lambda being an S-unit. True solutions always survive.

    :param data: The sieve input.
    :param threads: The number of worker processes.
    :return: The survivors, in lexicographic order.
    """
    points = data.outer_points()
    if threads <= 1 or len(points) < 2:
        return _BoxSieve(data).scan(points)

    chunk = max(1, len(points) // (threads * 8))
    chunks = [points[i:i + chunk] for i in range(0, len(points), chunk)]
    with ProcessPoolExecutor(max_workers=threads, initializer=_init_worker, initargs=(data,)) as executor:
        return [v for part in executor.map(_scan_chunk, chunks) for v in part]


def match_units(maps: tuple[ResidueMap, ...], torsion: FieldElement, w: int,
                units: tuple[FieldElement, ...], target: FieldElement, window: int) -> list[tuple[int, ...]]:
    """
    Find candidate exponents (t, e) with target = torsion^t * prod units^e by residues.

    :param maps: The auxiliary residue maps.
    :param torsion: The torsion generator.
    :param w: Its order.
    :param units: The free unit generators.
    :param target: A unit of the field.
    :param window: The exponent window; every |e_j| <= window.
    :return: The candidates in lexicographic order; each must be confirmed exactly.
    """
    rank = len(units)
    width = 2 * window + 1
    digits = np.indices((width,) * rank).reshape(rank, width ** rank) if rank else np.zeros((0, 1), dtype=np.int64)

    checks = []
    for rmap in maps:
        for h in range(rmap.homs):
            q = rmap.q
            tables = [_power_table(rmap.image(u, h), window, q) for u in units]
            checks.append((q, rmap.image(torsion, h), tables, rmap.image(target, h)))

    candidates = []
    everything = np.arange(digits.shape[1])
    for t in range(w):
        idx = everything
        for q, zeta, tables, goal in checks:
            value = np.full(idx.size, pow(zeta, t, q), dtype=np.int64)
            for j in range(rank):
                value = value * tables[j][digits[j][idx]] % q
            idx = idx[value == goal]
            if not idx.size:
                break
        for i in idx.tolist():
            candidates.append((t,) + tuple(int(digits[j][i]) - window for j in range(rank)))
    return candidates
