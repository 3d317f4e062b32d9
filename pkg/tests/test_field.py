# -*- coding: utf-8 -*-
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st
from sympy import primerange

from model.errors import DescriptorInvalidError, DomainError, PreconditionError
from model.field import ArithOp, FieldDescriptor, arith, embed, make_field
from conftest import load_fixture_field
from model.quadratic import Splitting, is_squarefree, splitting_of_2

Q7 = make_field(FieldDescriptor.quadratic(-7))
QI = make_field(FieldDescriptor.quadratic(-1))
Q5 = make_field(FieldDescriptor.quadratic(5))
ZETA16PLUS = load_fixture_field('zeta16plus')

small = st.integers(-6, 6)


def _nonzero(field):
    return st.lists(small, min_size=field.degree, max_size=field.degree) \
        .filter(any).map(field.element)


def test_rational_arithmetic(rationals):
    a = rationals.element(['1/2'])
    b = rationals.from_rational(3)
    assert a + b == Fraction(7, 2)
    assert a / b == Fraction(1, 6)
    assert arith(a, b, ArithOp.SUB) == Fraction(-5, 2)
    assert rationals.valuation(rationals.from_rational(12), rationals.factor_rational_prime(2)[0]) == 2
    assert rationals.valuation(rationals.element(['3/8']), rationals.factor_rational_prime(2)[0]) == -3


def test_golden_ratio(q5):
    w = q5.basis_element(1)
    assert w * w == w + 1
    assert q5.norm(w) == -1
    assert w * (1 / w) == q5.one
    assert q5.fundamental_unit() == w


def test_division_by_zero(q5):
    with pytest.raises(DomainError):
        q5.inverse(q5.zero)


def test_different_fields_do_not_mix(q5, rationals):
    with pytest.raises(DomainError):
        arith(q5.one, rationals.one, ArithOp.ADD)


def test_split_valuations():
    first, second = Q7.factor_rational_prime(2)
    w = Q7.basis_element(1)
    assert (first.root, second.root) == (0, 1)
    assert Q7.valuation(w, first) == 1
    assert Q7.valuation(w, second) == 0
    two = Q7.from_rational(2)
    assert Q7.valuation(two, first) == Q7.valuation(two, second) == 1


def test_ramified_valuation():
    P, = QI.factor_rational_prime(2)
    assert (P.e, P.f) == (2, 1)
    assert QI.valuation(QI.element([1, 1]), P) == 1
    assert QI.valuation(QI.from_rational(2), P) == 2
    assert QI.torsion() == (QI.basis_element(1), 4)


def test_valuation_of_zero_is_infinite(q5):
    P, = q5.factor_rational_prime(2)
    assert q5.valuation(q5.zero, P) == float('inf')


def test_factor_needs_a_prime(q5):
    with pytest.raises(PreconditionError):
        q5.factor_rational_prime(9)


@given(_nonzero(Q7), _nonzero(Q7))
def test_valuation_is_additive(a, b):
    P = Q7.factor_rational_prime(2)[0]
    assert Q7.valuation(a * b, P) == Q7.valuation(a, P) + Q7.valuation(b, P)


@given(_nonzero(Q5), _nonzero(Q5))
def test_quadratic_norm_is_multiplicative(a, b):
    field = a.field
    assert field.norm(a * b) == field.norm(a) * field.norm(b)


def test_splitting_agrees_with_factorisation():
    kinds = {(1, 2): Splitting.INERT, (2, 1): Splitting.RAMIFIED, (1, 1): Splitting.SPLIT}
    for d in range(-500, 501):
        if d in (0, 1) or not is_squarefree(d):
            continue
        primes = make_field(FieldDescriptor.quadratic(d)).factor_rational_prime(2)
        assert sum(P.e * P.f for P in primes) == 2
        assert kinds[primes[0].e, primes[0].f] is splitting_of_2(d), d


def test_primes_below_100_decompose_fully():
    for d in range(-200, 201):
        if d in (0, 1) or not is_squarefree(d):
            continue
        field = make_field(FieldDescriptor.quadratic(d))
        for p in primerange(2, 100):
            assert sum(P.e * P.f for P in field.factor_rational_prime(p)) == 2, (d, p)


@given(_nonzero(Q5), _nonzero(Q5))
def test_quadratic_trace_is_additive(a, b):
    assert Q5.trace(a + b) == Q5.trace(a) + Q5.trace(b)


@given(_nonzero(ZETA16PLUS), _nonzero(ZETA16PLUS))
def test_table_trace_is_additive(a, b):
    assert ZETA16PLUS.trace(a + b) == ZETA16PLUS.trace(a) + ZETA16PLUS.trace(b)


def test_trace_of_one(rationals, q5, zeta16plus, zeta16):
    assert [F.trace(F.one) for F in (rationals, q5, zeta16plus, zeta16)] == [1, 2, 4, 8]
    assert q5.trace(q5.basis_element(1)) == 1
    assert zeta16plus.trace(zeta16plus.basis_element(1)) == 0


def test_table_field(zeta16plus):
    theta = zeta16plus.basis_element(1)
    assert theta ** 4 == 4 * theta ** 2 - 2
    assert zeta16plus.norm(theta) == 2
    P, = zeta16plus.factor_rational_prime(2)
    assert (P.e, P.f) == (4, 1)
    assert zeta16plus.valuation(theta, P) == 1
    assert zeta16plus.valuation(zeta16plus.from_rational(2), P) == 4
    assert zeta16plus.valuation(zeta16plus.element(['1/2', 0, 0, 0]), P) == -4
    for unit in zeta16plus.unit_generators():
        assert abs(zeta16plus.norm(unit)) == 1
    assert theta * (1 / theta) == zeta16plus.one


@given(_nonzero(ZETA16PLUS), _nonzero(ZETA16PLUS))
def test_table_norm_is_multiplicative(a, b):
    field = ZETA16PLUS
    assert field.norm(a * b) == field.norm(a) * field.norm(b)


def test_cyclotomic_torsion(zeta16):
    zeta, w = zeta16.torsion()
    assert w == 16
    assert zeta ** 8 == -1
    assert zeta ** 16 == 1


def test_embedding_is_a_homomorphism(zeta16plus, zeta16):
    zeta = zeta16.basis_element(1)
    theta_image = zeta - zeta ** 7
    images = [theta_image ** k for k in range(4)]
    assert images[2] == zeta16.element([2, 0, 1, 0, 0, 0, -1, 0])
    assert images[3] == zeta16.element([0, 3, 0, 1, 0, -1, 0, -3])
    basis = [zeta16plus.basis_element(i) for i in range(4)]
    for a, b in product(basis, repeat=2):
        assert embed(a * b, zeta16, images) == embed(a, zeta16, images) * embed(b, zeta16, images)


def test_descriptor_validation():
    with pytest.raises(DescriptorInvalidError):
        make_field(FieldDescriptor.quadratic(4))
    with pytest.raises(DescriptorInvalidError):
        FieldDescriptor.from_dict({'kind': 'cubic'})
    with pytest.raises(DescriptorInvalidError):
        make_field(FieldDescriptor.from_dict({
            'kind': 'table', 'degree': 2, 'defining_polynomial': [2, 0, 1], 'signature': [1, 0],
        }))
    with pytest.raises(DescriptorInvalidError):
        make_field(FieldDescriptor.from_dict({
            'kind': 'table', 'degree': 2, 'mult_table': [[[1, 0], [0, 1]], [[0, 2], [3, 0]]], 'signature': [2, 0],
        }))
