# -*- coding: utf-8 -*-
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Self

from sympy import Poly, Rational, resultant, symbols

from model.errors import ParseError, PreconditionError

__all__ = ['NewformRecord', 'load_newforms', 'polynomial']

_x, _y = symbols('x y')

# refinement steps of the real root intervals before giving up
_MAX_REFINEMENTS = 40


def polynomial(coeffs: tuple[Fraction, ...] | tuple[int, ...], var=_x) -> Poly:
    """ Build a polynomial from coefficients listed from low to high degree. """
    return Poly([Rational(c.numerator, c.denominator) for c in map(Fraction, reversed(coeffs))] or [0], var)


@dataclass(frozen=True)
class NewformRecord:
    """
    The class represents a weight 2 newform of trivial character.

    The Hecke eigenvalue field is Q(theta) with theta a root of ``field_poly``;
    each eigenvalue c_l is given by its coordinates in the power basis of theta.

    Attributes:
        label: The label of the form, e.g. ``14.2.a.a``.
        level: The level N.
        weight: The weight, always 2.
        field_poly: The monic minimal polynomial of theta, low to high.
        eigenvalues: Map l -> coordinates of c_l.
    """
    label: str
    level: int
    weight: int
    field_poly: tuple[int, ...]
    eigenvalues: dict[int, tuple[Fraction, ...]]

    def __hash__(self) -> int:
        return hash((self.label, self.level))

    @property
    def degree(self) -> int:
        return len(self.field_poly) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def minimal_polynomial(self) -> Poly:
        return polynomial(self.field_poly)

    def eigenvalue(self, l: int) -> Poly:
        """
        Return c_l as a polynomial in theta.

        :raises PreconditionError: If the record carries no c_l.
        """
        return polynomial(self.eigenvalues_of(l))

    def rational_eigenvalue(self, l: int) -> int:
        """ Return the integer c_l of a rational form. """
        if not self.is_rational:
            raise PreconditionError(f'{self.label} is not rational')
        theta = -Fraction(self.field_poly[0])
        value = sum((Fraction(c) * theta ** k for k, c in enumerate(self.eigenvalues_of(l))), Fraction(0))
        if value.denominator != 1:
            raise ParseError(f'{self.label}: c_{l} = {value} is not an integer')
        return int(value)

    def eigenvalues_of(self, l: int) -> tuple[Fraction, ...]:
        if l not in self.eigenvalues:
            raise PreconditionError(f'{self.label} carries no eigenvalue at {l}')
        return self.eigenvalues[l]

    def characteristic_polynomial(self, l: int) -> Poly:
        """ Return the characteristic polynomial of c_l over Q, Res_x(m(x), y - c_l(x)). """
        m = self.minimal_polynomial.as_expr()
        g = self.eigenvalue(l).as_expr()
        return Poly(resultant(m, _y - g, _x), _y)

    def check_deligne(self) -> None:
        """
        Check |c_l| <= 2 sqrt(l) in every real embedding, with exact rational intervals.

        :raises ParseError: If an eigenvalue has a nonreal conjugate or leaves the interval.
        """
        for l in sorted(self.eigenvalues):
            chi = self.characteristic_polynomial(l)
            if chi.degree() < 1:
                raise ParseError(f'{self.label}: degenerate eigenvalue at {l}')
            eps = Rational(1, 10)
            for _ in range(_MAX_REFINEMENTS):
                intervals = chi.intervals(eps=eps)
                if sum(k for _, k in intervals) != chi.degree():
                    raise ParseError(f'{self.label}: c_{l} has a nonreal conjugate')
                undecided = False
                for (a, b), _ in intervals:
                    if max(a * a, b * b) <= 4 * l:
                        continue
                    if (a > 0 and a * a > 4 * l) or (b < 0 and b * b > 4 * l):
                        raise ParseError(f'{self.label}: c_{l} violates the bound 2 sqrt({l})')
                    undecided = True
                if not undecided:
                    break
                eps /= 10
            else:
                raise ParseError(f'{self.label}: could not separate c_{l} from 2 sqrt({l})')

    @classmethod
    def from_dict(cls, data: dict[str, Any], validate: bool = True) -> Self:
        """
        Build a record from its fixture form.

        :param data: ``{label, level, weight, field_poly, eigenvalues: {"l": [coords]}}``.
        :param validate: Whether to check the Deligne bound.
        :return: The record.
        """
        try:
            record = cls(
                label=str(data['label']),
                level=int(data['level']),
                weight=int(data.get('weight', 2)),
                field_poly=tuple(int(c) for c in data['field_poly']),
                eigenvalues={
                    int(l): tuple(Fraction(c) for c in coords)
                    for l, coords in data['eigenvalues'].items()
                },
            )
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise ParseError(f'malformed newform record: {e}') from e
        if record.weight != 2:
            raise ParseError(f'{record.label}: weight {record.weight} is not 2')
        if record.degree < 1 or record.field_poly[-1] != 1:
            raise ParseError(f'{record.label}: field polynomial must be monic of positive degree')
        if validate:
            record.check_deligne()
        return record

    def to_dict(self) -> dict[str, Any]:
        return {
            'label': self.label,
            'level': self.level,
            'weight': self.weight,
            'field_poly': list(self.field_poly),
            'eigenvalues': {str(l): [str(c) for c in coords] for l, coords in sorted(self.eigenvalues.items())},
        }


def load_newforms(path: str | Path) -> list[NewformRecord]:
    """ Load the newform fixture of one level. """
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ParseError(f'invalid JSON in {path}: {e}') from e
    return [NewformRecord.from_dict(form) for form in data.get('forms', [])]
