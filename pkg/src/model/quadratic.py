# -*- coding: utf-8 -*-
"""
Integer arithmetic behind quadratic fields Q(sqrt(d)).

Elements of O_K are written x + y*w over the integral basis {1, w} with
w^2 = t*w + n, where (t, n) = (1, (d - 1) / 4) if d = 1 (mod 4) and
(t, n) = (0, d) otherwise.
"""
from enum import Enum
from math import gcd, isqrt

from sympy import factorint
from sympy.functions.combinatorial.numbers import legendre_symbol
from sympy.ntheory import sqrt_mod

from model.errors import DescriptorInvalidError, ResourceError

__all__ = [
    'Splitting',
    'check_radicand',
    'class_number',
    'discriminant',
    'fundamental_unit',
    'is_squarefree',
    'omega_relation',
    'omega_roots_mod',
    'quadratic_norm',
    'splitting_of_2',
    'splitting_type',
]


class Splitting(Enum):
    """
    The class defines how a rational prime decomposes in a quadratic field.

    Attributes:
        SPLIT: Two primes of residue degree 1.
        INERT: One prime of residue degree 2.
        RAMIFIED: One prime with ramification index 2.
    """
    SPLIT = 'split'
    INERT = 'inert'
    RAMIFIED = 'ramified'


def is_squarefree(n: int) -> bool:
    """ Return whether the integer is squarefree; 0 is not. """
    if n == 0:
        return False
    return all(k == 1 for k in factorint(abs(n)).values())


def omega_relation(d: int) -> tuple[int, int]:
    """
    Return (t, n) with w^2 = t*w + n for the integral basis generator w.

    :param d: A squarefree integer other than 0 and 1.
    :return: The pair (t, n).
    """
    if d % 4 == 1:
        return 1, (d - 1) // 4
    return 0, d


def discriminant(d: int) -> int:
    """ Return the field discriminant of Q(sqrt(d)). """
    return d if d % 4 == 1 else 4 * d


def quadratic_norm(x: int, y: int, d: int) -> int:
    """ Return the norm of x + y*w, which is x^2 + t*x*y - n*y^2. """
    t, n = omega_relation(d)
    return x * x + t * x * y - n * y * y


def splitting_type(d: int, p: int) -> Splitting:
    """
    Classify the decomposition of p by the Kronecker symbol (D / p).

    :param d: The squarefree radicand.
    :param p: A rational prime.
    :return: The splitting type.
    """
    disc = discriminant(d)
    if p == 2:
        if disc % 2 == 0:
            return Splitting.RAMIFIED
        return Splitting.SPLIT if disc % 8 == 1 else Splitting.INERT
    symbol = legendre_symbol(disc % p, p) if disc % p else 0
    if symbol == 0:
        return Splitting.RAMIFIED
    return Splitting.SPLIT if symbol == 1 else Splitting.INERT


def splitting_of_2(d: int) -> Splitting:
    """ Classify 2 in Q(sqrt(d)) from d mod 8 without building the field. """
    match d % 8:
        case 1:
            return Splitting.SPLIT
        case 5:
            return Splitting.INERT
        case _:
            return Splitting.RAMIFIED


def omega_roots_mod(d: int, p: int) -> list[int]:
    """
    Return the sorted roots of the minimal polynomial of w modulo p.

    A split prime has two roots, a ramified prime one, an inert prime none.
    """
    t, n = omega_relation(d)
    if p == 2:
        return [r for r in range(2) if (r * r - t * r - n) % 2 == 0]
    if t == 0:
        return sorted(set(sqrt_mod(n % p, p, all_roots=True) or []))
    # x^2 - x - n has discriminant d
    half = pow(2, -1, p)
    roots = sqrt_mod(d % p, p, all_roots=True) or []
    return sorted({(1 + s) * half % p for s in roots})


def _lt_sqrt(x: int, disc: int) -> bool:
    """ Return whether x < sqrt(disc) for a non-square disc. """
    return x < 0 or x * x < disc


def _gt_sqrt(x: int, disc: int) -> bool:
    """ Return whether x > sqrt(disc) for a non-square disc. """
    return x > 0 and x * x > disc


def _imaginary_class_number(disc: int) -> int:
    count = 0
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            if (b * b - disc) % (4 * a):
                continue
            c = (b * b - disc) // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            if gcd(gcd(a, b), c) == 1:
                count += 1
        a += 1
    return count


def _rho(form: tuple[int, int, int], disc: int) -> tuple[int, int, int]:
    """ The reduction operator on indefinite forms, as in Cohen 5.6.4. """
    _, b, c = form
    s = isqrt(disc)
    modulus = 2 * abs(c)
    r0 = -b % modulus
    if _gt_sqrt(abs(c), disc):
        r = r0 if r0 <= abs(c) else r0 - modulus
    else:
        r = r0 + modulus * ((s - r0) // modulus)
    return c, r, (r * r - disc) // (4 * c)


def _real_narrow_class_number(disc: int) -> int:
    s = isqrt(disc)
    reduced = set()
    for b in range(1, s + 1):
        if (b - disc) % 2:
            continue
        for big_a in range(1, (s + b) // 2 + 2):
            if not (_gt_sqrt(2 * big_a + b, disc) and _lt_sqrt(2 * big_a - b, disc)):
                continue
            for a in (big_a, -big_a):
                if (b * b - disc) % (4 * a):
                    continue
                c = (b * b - disc) // (4 * a)
                if gcd(gcd(a, b), c) == 1:
                    reduced.add((a, b, c))

    cycles = 0
    seen = set()
    for form in sorted(reduced):
        if form in seen:
            continue
        cycles += 1
        while form not in seen:
            seen.add(form)
            form = _rho(form, disc)
    return cycles


def class_number(d: int, cap: int = 10 ** 6) -> int:
    """
    Compute h(Q(sqrt(d))) by enumerating reduced binary quadratic forms.

    Imaginary fields count reduced forms directly. Real fields count cycles of
    reduced indefinite forms, which gives the narrow class number, and halve
    it when the fundamental unit has norm +1.

    :param d: The squarefree radicand.
    :param cap: The largest admissible absolute discriminant.
    :return: The class number.
    """
    disc = discriminant(d)
    if abs(disc) > cap:
        raise ResourceError(f'|disc| = {abs(disc)} exceeds the class number cap {cap}')
    if disc < 0:
        return _imaginary_class_number(disc)

    narrow = _real_narrow_class_number(disc)
    x, y = fundamental_unit(d)
    return narrow if quadratic_norm(x, y, d) == -1 else narrow // 2


def fundamental_unit(d: int) -> tuple[int, int]:
    """
    Find the fundamental unit x + y*w > 1 of a real quadratic field.

    The convergents p/q of the continued fraction of w are scanned until
    p - q*w is a unit; its conjugate is then the fundamental unit.

    :param d: A squarefree d > 1.
    :return: The coordinates (x, y).
    """
    if d <= 1:
        raise DescriptorInvalidError(f'no fundamental unit for d = {d}')
    t, n = omega_relation(d)
    s = isqrt(d)
    big_p, big_q = (1, 2) if t == 1 else (0, 1)
    p_prev, p_cur = 0, 1
    q_prev, q_cur = 1, 0
    while True:
        a = (big_p + s) // big_q
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        if abs(quadratic_norm(p_cur, -q_cur, d)) == 1:
            return p_cur - q_cur * t, q_cur
        big_p = a * big_q - big_p
        big_q = (d - big_p * big_p) // big_q


def check_radicand(d: int) -> None:
    """ Raise unless d is a squarefree integer other than 0 and 1. """
    if d in (0, 1) or not is_squarefree(d):
        raise DescriptorInvalidError(f'quadratic radicand must be squarefree and not 0 or 1, got {d}')
