# -*- coding: utf-8 -*-
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property, reduce
from itertools import product
from pathlib import Path
from typing import Any, Self

from sympy import QQ, isprime, multiplicity
from sympy.polys.matrices import DomainMatrix

from model import quadratic
from model.errors import DescriptorInvalidError, DomainError, PreconditionError, UnsupportedFieldError
from model.quadratic import Splitting

__all__ = [
    'INFINITY',
    'ArithOp',
    'Coords',
    'Field',
    'FieldDescriptor',
    'FieldElement',
    'FieldKind',
    'PrimeFixture',
    'PrimeIdealData',
    'arith',
    'embed',
    'make_field',
    'parse_coords',
]

INFINITY = math.inf

type Coords = tuple[Fraction, ...]


def parse_coords(values: list[Any] | tuple[Any, ...]) -> Coords:
    """
    Parse a coordinate vector given as integers or strings such as ``"-3/4"``.

    :param values: The raw coordinates.
    :return: The exact coordinates.
    """
    try:
        return tuple(Fraction(v) if not isinstance(v, Fraction) else v for v in values)
    except (TypeError, ValueError) as e:
        raise DescriptorInvalidError(f'invalid coordinates {values!r}') from e


def format_coords(coords: Coords) -> list[str]:
    """ Return the coordinates as strings suitable for JSON. """
    return [str(c) for c in coords]


class FieldKind(Enum):
    """
    The class defines how a number field is described.

    Attributes:
        RATIONAL: The field Q.
        QUADRATIC: A quadratic field Q(sqrt(d)).
        TABLE: A field given by the multiplication table of an integral basis.
    """
    RATIONAL = 'rational'
    QUADRATIC = 'quadratic'
    TABLE = 'table'


class ArithOp(Enum):
    """ The class defines the four field operations. """
    ADD = 'add'
    SUB = 'sub'
    MUL = 'mul'
    DIV = 'div'


@dataclass(frozen=True)
class PrimeFixture:
    """
    The class holds the fixture data of a principal prime of a table field.

    Attributes:
        p: The residue characteristic.
        e: The ramification index.
        f: The residue degree.
        generator: Coordinates of an element generating the prime.
    """
    p: int
    e: int
    f: int
    generator: Coords


@dataclass(frozen=True)
class FieldDescriptor:
    """
    The class describes a number field.

    Table fields give either ``mult_table`` (n x n x n coordinates of the
    products of basis elements) or a monic ``defining_polynomial`` whose power
    basis is an integral basis. The first basis element must be 1.
    """
    kind: FieldKind
    d: int | None = None
    label: str = ''
    degree: int = 1
    basis_names: tuple[str, ...] = ()
    mult_table: tuple[tuple[Coords, ...], ...] | None = None
    defining_polynomial: tuple[int, ...] | None = None
    signature: tuple[int, int] | None = None
    class_number: int | None = None
    unit_generators: tuple[Coords, ...] = ()
    torsion_generator: Coords | None = None
    torsion_order: int | None = None
    prime_fixtures: tuple[PrimeFixture, ...] = ()
    galois: bool = False
    search_bound: int | None = None

    @classmethod
    def rational(cls) -> Self:
        """ Return the descriptor of Q. """
        return cls(FieldKind.RATIONAL, label='Q', degree=1, signature=(1, 0))

    @classmethod
    def quadratic(cls, d: int) -> Self:
        """ Return the descriptor of Q(sqrt(d)). """
        return cls(FieldKind.QUADRATIC, d=d, label=f'Q(sqrt({d}))', degree=2)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        """
        Build a descriptor from its JSON form.

        :param data: The decoded JSON object.
        :return: The descriptor.
        """
        try:
            kind = FieldKind(data['kind'])
        except (KeyError, ValueError) as e:
            raise DescriptorInvalidError(f'unknown field kind in {data!r}') from e

        if kind is FieldKind.RATIONAL:
            return cls.rational()
        if kind is FieldKind.QUADRATIC:
            if not isinstance(data.get('d'), int):
                raise DescriptorInvalidError('quadratic descriptor needs an integer `d`')
            return cls.quadratic(data['d'])

        try:
            degree = int(data['degree'])
            table = data.get('mult_table')
            poly = data.get('defining_polynomial')
            signature = data.get('signature')
            torsion = data.get('torsion_generator')
            return cls(
                kind,
                label=data.get('label', f'table field of degree {degree}'),
                degree=degree,
                basis_names=tuple(data.get('basis_names', [f'b{i}' for i in range(degree)])),
                mult_table=tuple(tuple(parse_coords(v) for v in row) for row in table) if table else None,
                defining_polynomial=tuple(int(c) for c in poly) if poly else None,
                signature=(int(signature[0]), int(signature[1])) if signature else None,
                class_number=data.get('class_number'),
                unit_generators=tuple(parse_coords(u) for u in data.get('unit_generators', [])),
                torsion_generator=parse_coords(torsion) if torsion else None,
                torsion_order=data.get('torsion_order'),
                prime_fixtures=tuple(
                    PrimeFixture(int(p['p']), int(p['e']), int(p['f']), parse_coords(p['uniformizer']))
                    for p in data.get('prime_fixtures', [])
                ),
                galois=bool(data.get('galois', False)),
                search_bound=data.get('search_bound'),
            )
        except (KeyError, TypeError, IndexError) as e:
            raise DescriptorInvalidError(f'malformed table descriptor: {e}') from e

    @classmethod
    def load(cls, path: str | Path) -> Self:
        """ Load a descriptor from a JSON file. """
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return cls.from_dict(json.load(f))
        except json.JSONDecodeError as e:
            raise DescriptorInvalidError(f'invalid JSON in {path}: {e}') from e


@dataclass(frozen=True)
class PrimeIdealData:
    """
    The class describes a prime ideal P above a rational prime p.

    Attributes:
        p: The residue characteristic.
        e: The ramification index.
        f: The residue degree.
        label: A readable label such as ``P2`` or ``P3,1``.
        root: For a split quadratic prime, the root r with P = (p, w - r).
        generator: For a table-field prime, an element generating P.
    """
    p: int
    e: int
    f: int
    label: str
    root: int | None = None
    generator: Coords | None = None

    @property
    def norm(self) -> int:
        """ Return the absolute norm p^f. """
        return self.p ** self.f

    def ord(self, a: 'FieldElement') -> int | float:
        """ The valuation functional of the prime. """
        return a.field.valuation(a, self)


@dataclass(frozen=True, eq=False)
class FieldElement:
    """
    The class implements an exact element of a number field.

    Attributes:
        field: The field the element belongs to.
        coords: Exact coordinates relative to the integral basis.
    """
    field: 'Field'
    coords: Coords

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            other = self.field.from_rational(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field.label == other.field.label and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.field.label, self.coords))

    def __repr__(self) -> str:
        return f'FieldElement({self.field.label}, {format_coords(self.coords)})'

    def _coerce(self, other: 'FieldElement | int | Fraction') -> 'FieldElement':
        if isinstance(other, FieldElement):
            return other
        return self.field.from_rational(other)

    def __add__(self, other: 'FieldElement | int | Fraction') -> 'FieldElement':
        return self.field.add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: 'FieldElement | int | Fraction') -> 'FieldElement':
        return self.field.sub(self, self._coerce(other))

    def __rsub__(self, other: 'FieldElement | int | Fraction') -> 'FieldElement':
        return self.field.sub(self._coerce(other), self)

    def __mul__(self, other: 'FieldElement | int | Fraction') -> 'FieldElement':
        return self.field.mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: 'FieldElement | int | Fraction') -> 'FieldElement':
        return self.field.div(self, self._coerce(other))

    def __rtruediv__(self, other: 'FieldElement | int | Fraction') -> 'FieldElement':
        return self.field.div(self._coerce(other), self)

    def __neg__(self) -> 'FieldElement':
        return FieldElement(self.field, tuple(-c for c in self.coords))

    def __pow__(self, exponent: int) -> 'FieldElement':
        return self.field.power(self, exponent)

    def is_zero(self) -> bool:
        """ Return whether the element is zero. """
        return not any(self.coords)

    def is_rational(self) -> bool:
        """ Return whether the element lies in Q. """
        return not any(self.coords[1:])


@dataclass(frozen=True)
class Field:
    """
    The class implements exact arithmetic in Q, quadratic fields and table fields.

    Attributes:
        descriptor: The descriptor the field was built from.
        degree: The degree n over Q.
        signature: The signature (r1, r2).
        table: The multiplication table of the integral basis.
    """
    descriptor: FieldDescriptor
    degree: int
    signature: tuple[int, int]
    table: tuple[tuple[Coords, ...], ...]

    _sparse: tuple = field(init=False, repr=False)

    def __post_init__(self) -> None:
        """ Cache the nonzero structure constants for multiplication. """
        sparse = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(self.table[i][j]) if c)
                for j in range(self.degree)
            )
            for i in range(self.degree)
        )
        object.__setattr__(self, '_sparse', sparse)

    @property
    def kind(self) -> FieldKind:
        return self.descriptor.kind

    @property
    def label(self) -> str:
        return self.descriptor.label

    @property
    def d(self) -> int | None:
        return self.descriptor.d

    @cached_property
    def _omega(self) -> tuple[int, int]:
        return quadratic.omega_relation(self.d)

    # construction helpers

    def element(self, coords: list[Any] | tuple[Any, ...]) -> FieldElement:
        """ Return the element with the given coordinates. """
        coords = parse_coords(coords)
        if len(coords) != self.degree:
            raise DomainError(f'expected {self.degree} coordinates, got {len(coords)}')
        return FieldElement(self, coords)

    def from_rational(self, value: int | Fraction) -> FieldElement:
        """ Return the rational number as a field element. """
        return FieldElement(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))

    @property
    def zero(self) -> FieldElement:
        return self.from_rational(0)

    @property
    def one(self) -> FieldElement:
        return self.from_rational(1)

    def basis_element(self, index: int) -> FieldElement:
        """ Return the i-th integral basis element. """
        return FieldElement(self, tuple(Fraction(int(i == index)) for i in range(self.degree)))

    # arithmetic

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return FieldElement(self, tuple(x + y for x, y in zip(a.coords, b.coords)))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return FieldElement(self, tuple(x - y for x, y in zip(a.coords, b.coords)))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        match self.kind:
            case FieldKind.RATIONAL:
                return FieldElement(self, (a.coords[0] * b.coords[0],))
            case FieldKind.QUADRATIC:
                t, n = self._omega
                a0, a1 = a.coords
                b0, b1 = b.coords
                cross = a1 * b1
                return FieldElement(self, (a0 * b0 + n * cross, a0 * b1 + a1 * b0 + t * cross))

        result = [Fraction(0)] * self.degree
        for i, x in enumerate(a.coords):
            if not x:
                continue
            row = self._sparse[i]
            for j, y in enumerate(b.coords):
                if not y:
                    continue
                xy = x * y
                for k, c in row[j]:
                    result[k] += xy * c
        return FieldElement(self, tuple(result))

    def inverse(self, a: FieldElement) -> FieldElement:
        """ Return 1 / a. """
        if a.is_zero():
            raise DomainError('division by zero')
        match self.kind:
            case FieldKind.RATIONAL:
                return FieldElement(self, (1 / a.coords[0],))
            case FieldKind.QUADRATIC:
                n = self.norm(a)
                conj = self.conjugate(a)
                return FieldElement(self, tuple(c / n for c in conj.coords))

        matrix = self._domain_matrix(self.mult_matrix(a))
        rhs = DomainMatrix([[QQ(int(i == 0))] for i in range(self.degree)], (self.degree, 1), QQ)
        solution = matrix.lu_solve(rhs).to_list()
        return FieldElement(self, tuple(_to_fraction(row[0]) for row in solution))

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul(a, self.inverse(b))

    def power(self, a: FieldElement, exponent: int) -> FieldElement:
        """ Return a^exponent by repeated squaring; negative exponents invert. """
        if exponent < 0:
            a, exponent = self.inverse(a), -exponent
        result, base = self.one, a
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            exponent >>= 1
            if exponent:
                base = self.mul(base, base)
        return result

    def conjugate(self, a: FieldElement) -> FieldElement:
        """ Return the Galois conjugate of an element of a quadratic field. """
        if self.kind is not FieldKind.QUADRATIC:
            raise UnsupportedFieldError('conjugation is only defined for quadratic fields')
        t, _ = self._omega
        x, y = a.coords
        return FieldElement(self, (x + t * y, -y))

    # invariants

    def mult_matrix(self, a: FieldElement) -> list[list[Fraction]]:
        """ Return the matrix of multiplication by a on the integral basis. """
        n = self.degree
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            column = self.mul(a, self.basis_element(j)).coords
            for k in range(n):
                matrix[k][j] = column[k]
        return matrix

    @staticmethod
    def _domain_matrix(rows: list[list[Fraction]]) -> DomainMatrix:
        n = len(rows)
        return DomainMatrix([[QQ(c.numerator, c.denominator) for c in row] for row in rows], (n, n), QQ)

    def norm(self, a: FieldElement) -> Fraction:
        """ Return the exact norm N_{K/Q}(a). """
        match self.kind:
            case FieldKind.RATIONAL:
                return a.coords[0]
            case FieldKind.QUADRATIC:
                t, n = self._omega
                x, y = a.coords
                return x * x + t * x * y - n * y * y
        return _to_fraction(self._domain_matrix(self.mult_matrix(a)).det())

    def trace(self, a: FieldElement) -> Fraction:
        """ Return the exact trace Tr_{K/Q}(a). """
        match self.kind:
            case FieldKind.RATIONAL:
                return a.coords[0]
            case FieldKind.QUADRATIC:
                t, _ = self._omega
                x, y = a.coords
                return 2 * x + t * y
        matrix = self.mult_matrix(a)
        return sum((matrix[i][i] for i in range(self.degree)), Fraction(0))

    def denominator(self, a: FieldElement) -> int:
        """ Return the least common denominator of the coordinates. """
        return reduce(math.lcm, (c.denominator for c in a.coords), 1)

    def is_integral(self, a: FieldElement) -> bool:
        """ Return whether a lies in the ring of integers. """
        return all(c.denominator == 1 for c in a.coords)

    # primes and valuations

    def factor_rational_prime(self, p: int) -> list[PrimeIdealData]:
        """
        Return the primes above p with their ramification data.

        :param p: A rational prime.
        :return: The primes above p, ordered by label.
        """
        if not isprime(p):
            raise PreconditionError(f'{p} is not prime')

        match self.kind:
            case FieldKind.RATIONAL:
                return [PrimeIdealData(p, 1, 1, str(p))]
            case FieldKind.QUADRATIC:
                match quadratic.splitting_type(self.d, p):
                    case Splitting.INERT:
                        return [PrimeIdealData(p, 1, 2, f'P{p}')]
                    case Splitting.RAMIFIED:
                        root, = quadratic.omega_roots_mod(self.d, p)
                        return [PrimeIdealData(p, 2, 1, f'P{p}', root=root)]
                    case Splitting.SPLIT:
                        return [
                            PrimeIdealData(p, 1, 1, f'P{p},{r}', root=r)
                            for r in quadratic.omega_roots_mod(self.d, p)
                        ]

        fixtures = [x for x in self.descriptor.prime_fixtures if x.p == p]
        if sum(x.e * x.f for x in fixtures) != self.degree:
            raise UnsupportedFieldError(f'{self.label} carries no complete prime fixture for p = {p}')
        return [
            PrimeIdealData(p, x.e, x.f, f'P{p}' if len(fixtures) == 1 else f'P{p},{i}', generator=x.generator)
            for i, x in enumerate(fixtures)
        ]

    def valuation(self, a: FieldElement, prime: PrimeIdealData) -> int | float:
        """
        Return ord_P(a), or INFINITY for a = 0.

        :param a: The element.
        :param prime: The prime P.
        :return: The valuation.
        """
        if a.is_zero():
            return INFINITY
        p = prime.p

        match self.kind:
            case FieldKind.RATIONAL:
                return _ord_p(a.coords[0], p)
            case FieldKind.QUADRATIC:
                norm_ord = _ord_p(self.norm(a), p)
                if prime.e == 2:
                    return norm_ord
                if prime.f == 2:
                    return norm_ord // 2
                content = min(_ord_p(c, p) for c in a.coords if c)
                x, y = (c / Fraction(p) ** content for c in a.coords)
                residue = (_mod_p(x, p) + _mod_p(y, p) * prime.root) % p
                if residue:
                    return content
                return content + norm_ord - 2 * content

        if prime.generator is None:
            raise UnsupportedFieldError(f'no generator fixture for {prime.label}')
        scale = self.denominator(a)
        x = a * scale
        pi_inverse = self.inverse(self.element(prime.generator))
        v = 0
        while True:
            y = x * pi_inverse
            if not self.is_integral(y):
                break
            x, v = y, v + 1
        return v - prime.e * _ord_p(Fraction(scale), p)

    # class group and units

    def class_number(self, cap: int = 10 ** 6) -> int:
        """ Return h(K); table fields need a fixture value. """
        match self.kind:
            case FieldKind.RATIONAL:
                return 1
            case FieldKind.QUADRATIC:
                return quadratic.class_number(self.d, cap)
        if self.descriptor.class_number is None:
            raise UnsupportedFieldError(f'{self.label} carries no class number fixture')
        return int(self.descriptor.class_number)

    def fundamental_unit(self) -> FieldElement | None:
        """
        Return a fundamental unit of a real quadratic field.

        Fields of unit rank 0 return None; table fields return their first
        unit fixture.
        """
        match self.kind:
            case FieldKind.RATIONAL:
                return None
            case FieldKind.QUADRATIC:
                if self.d < 0:
                    return None
                return self.element(quadratic.fundamental_unit(self.d))
        units = self.unit_generators()
        return units[0] if units else None

    def unit_generators(self) -> tuple[FieldElement, ...]:
        """ Return generators of the unit group modulo torsion. """
        if self.kind is FieldKind.TABLE:
            return tuple(self.element(u) for u in self.descriptor.unit_generators)
        unit = self.fundamental_unit()
        return (unit,) if unit is not None else ()

    def torsion(self) -> tuple[FieldElement, int]:
        """ Return a generator of the roots of unity and its order w. """
        if self.kind is FieldKind.QUADRATIC and self.d in (-1, -3):
            # w = i for d = -1, and w = (1 + sqrt(-3)) / 2 of order 6 for d = -3
            return self.basis_element(1), 4 if self.d == -1 else 6
        generator = self.descriptor.torsion_generator
        if self.kind is FieldKind.TABLE and generator is not None:
            return self.element(generator), int(self.descriptor.torsion_order)
        return self.from_rational(-1), 2


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _ord_p(value: Fraction, p: int) -> int:
    value = Fraction(value)
    if not value:
        raise DomainError('valuation of zero')
    return multiplicity(p, abs(value.numerator)) - multiplicity(p, value.denominator)


def _mod_p(value: Fraction, p: int) -> int:
    return value.numerator * pow(value.denominator, -1, p) % p


def _table_from_polynomial(poly: tuple[int, ...]) -> tuple[tuple[Coords, ...], ...]:
    """ Derive the power-basis multiplication table of a monic polynomial. """
    n = len(poly) - 1
    if n < 1 or poly[-1] != 1:
        raise DescriptorInvalidError('defining polynomial must be monic of positive degree')
    powers: list[Coords] = [tuple(Fraction(int(i == k)) for i in range(n)) for k in range(n)]
    for _ in range(n, 2 * n - 1):
        # x * x^(m-1), reduced with x^n = -(c_0 + ... + c_{n-1} x^(n-1))
        prev = powers[-1]
        shifted = [Fraction(0)] + list(prev[:-1])
        top = prev[-1]
        powers.append(tuple(shifted[i] - top * poly[i] for i in range(n)))
    return tuple(tuple(powers[i + j] for j in range(n)) for i in range(n))


def _check_table(table: tuple[tuple[Coords, ...], ...], n: int) -> None:
    if len(table) != n or any(len(row) != n or any(len(c) != n for c in row) for row in table):
        raise DescriptorInvalidError(f'multiplication table must be {n} x {n} x {n}')
    for i in range(n):
        if table[0][i] != tuple(Fraction(int(k == i)) for k in range(n)):
            raise DescriptorInvalidError('the first basis element must be 1')
        for j in range(n):
            if table[i][j] != table[j][i]:
                raise DescriptorInvalidError(f'table is not commutative at ({i}, {j})')

    def times(u: Coords, k: int) -> Coords:
        result = [Fraction(0)] * n
        for i, x in enumerate(u):
            if x:
                for m, c in enumerate(table[i][k]):
                    result[m] += x * c
        return tuple(result)

    for i, j, k in product(range(n), repeat=3):
        if times(table[i][j], k) != times(table[j][k], i):
            raise DescriptorInvalidError(f'table is not associative at ({i}, {j}, {k})')


def make_field(descriptor: FieldDescriptor) -> Field:
    """
    Build a field handle from its descriptor, validating the descriptor invariants.

    :param descriptor: The field descriptor.
    :return: The field.
    """
    match descriptor.kind:
        case FieldKind.RATIONAL:
            return Field(descriptor, 1, (1, 0), (((Fraction(1),),),))
        case FieldKind.QUADRATIC:
            quadratic.check_radicand(descriptor.d)
            t, n = quadratic.omega_relation(descriptor.d)
            one, w = (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))
            table = ((one, w), (w, (Fraction(n), Fraction(t))))
            signature = (2, 0) if descriptor.d > 0 else (0, 1)
            return Field(descriptor, 2, signature, table)

    n = descriptor.degree
    if descriptor.mult_table is not None:
        table = descriptor.mult_table
    elif descriptor.defining_polynomial is not None:
        table = _table_from_polynomial(descriptor.defining_polynomial)
    else:
        raise DescriptorInvalidError('table descriptor needs `mult_table` or `defining_polynomial`')
    _check_table(table, n)

    if descriptor.signature is None:
        raise DescriptorInvalidError('table descriptor needs a signature')
    r1, r2 = descriptor.signature
    if r1 < 0 or r2 < 0 or r1 + 2 * r2 != n:
        raise DescriptorInvalidError(f'signature {descriptor.signature} does not match degree {n}')
    if descriptor.torsion_order is not None and descriptor.torsion_order % 2:
        raise DescriptorInvalidError('torsion order must be even')
    for fixture in descriptor.prime_fixtures:
        if len(fixture.generator) != n:
            raise DescriptorInvalidError(f'prime fixture above {fixture.p} has the wrong length')
    return Field(descriptor, n, (r1, r2), table)


def arith(a: FieldElement, b: FieldElement, op: ArithOp) -> FieldElement:
    """
    Apply a field operation exactly.

    :param a: The left operand.
    :param b: The right operand.
    :param op: The operation.
    :return: The exact result.
    """
    if a.field.label != b.field.label:
        raise DomainError(f'operands live in different fields: {a.field.label}, {b.field.label}')
    match op:
        case ArithOp.ADD:
            return a.field.add(a, b)
        case ArithOp.SUB:
            return a.field.sub(a, b)
        case ArithOp.MUL:
            return a.field.mul(a, b)
        case ArithOp.DIV:
            return a.field.div(a, b)


def embed(a: FieldElement, target: Field, basis_images: list[FieldElement]) -> FieldElement:
    """
    Map an element along the field homomorphism fixed by the images of the basis.

    :param a: The element of the source field.
    :param target: The target field.
    :param basis_images: The images of the source integral basis.
    :return: The image of a.
    """
    result = target.zero
    for c, image in zip(a.coords, basis_images):
        if c:
            result = result + image * c
    return result
