# -*- coding: utf-8 -*-
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from model.errors import DomainError, NotInGroupError
from model.field import FieldDescriptor, make_field
from model.quadratic import is_squarefree
from model.sunit import build_sunit_group, evertse_bound, is_sunit

Q5 = make_field(FieldDescriptor.quadratic(5))
Q5_GROUP = build_sunit_group(Q5, Q5.factor_rational_prime(2))
QM5 = make_field(FieldDescriptor.quadratic(-5))


def _primes(field, *ps):
    return tuple(P for p in ps for P in field.factor_rational_prime(p))


def test_is_sunit(rationals, q5):
    S = _primes(rationals, 2)
    assert is_sunit(rationals, S, rationals.from_rational(Fraction(-1, 8)))
    assert not is_sunit(rationals, S, rationals.from_rational(Fraction(3, 8)))
    assert not is_sunit(rationals, S, rationals.zero)
    S = _primes(q5, 2)
    assert is_sunit(q5, S, q5.from_rational(2))
    assert is_sunit(q5, S, q5.basis_element(1))
    assert is_sunit(q5, S, 1 / q5.element([2, 4]))
    assert not is_sunit(q5, S, q5.from_rational(3))


def test_rational_group(rationals):
    group = build_sunit_group(rationals, _primes(rationals, 2, 3))
    assert group.rank == 2
    assert group.generators == (rationals.from_rational(2), rationals.from_rational(3))
    assert group.fold(rationals.from_rational(-12)) == (1, 2, 1)
    assert group.unfold((1, 2, 1)) == -12
    assert group.fold(rationals.from_rational(Fraction(1, 6))) == (0, -1, -1)
    with pytest.raises(NotInGroupError):
        group.fold(rationals.from_rational(5))
    with pytest.raises(DomainError):
        group.unfold((0, 1))


def test_duplicate_primes(rationals):
    with pytest.raises(DomainError):
        build_sunit_group(rationals, _primes(rationals, 2, 2))


def test_evertse_bound(rationals, zeta16plus):
    assert evertse_bound(rationals, _primes(rationals, 2)) == 3 * 7 ** 5
    assert evertse_bound(zeta16plus, zeta16plus.factor_rational_prime(2)) == 3 * 7 ** 14


def test_real_quadratic_group():
    assert Q5_GROUP.rank == 2
    assert Q5_GROUP.units == (Q5.basis_element(1),)
    assert Q5_GROUP.relations == ((1,),)


@given(st.integers(0, 1), st.integers(-5, 5), st.integers(-5, 5))
def test_fold_inverts_unfold(t, e, f):
    v = (t, e, f)
    assert Q5_GROUP.fold(Q5_GROUP.unfold(v)) == v


def test_non_principal_prime():
    S = _primes(QM5, 2)
    group = build_sunit_group(QM5, S)
    assert QM5.class_number() == 2
    assert group.relations == ((2,),)
    assert group.units == ()
    assert group.s_generators[0] in (QM5.from_rational(2), QM5.from_rational(-2))


def test_relation_lattice_is_triangular():
    S = _primes(QM5, 2, 3)
    assert len(S) == 3
    group = build_sunit_group(QM5, S)
    assert group.relations == ((2, 0, 0), (1, 1, 0), (1, 0, 1))
    for g, row in zip(group.s_generators, group.relations):
        assert tuple(QM5.valuation(g, P) for P in S) == row
    three = QM5.from_rational(3)
    assert group.unfold(group.fold(three)) == three
    assert group.fold(three)[1:] == (-1, 1, 1)


def test_table_field_group(zeta16plus):
    group = build_sunit_group(zeta16plus, zeta16plus.factor_rational_prime(2))
    assert group.rank == 4
    assert group.w == 2
    u1, u2, u3 = group.units
    target = -(u1 ** 2) / u2 * u3 ** 3
    assert group.fold(target) == (1, 2, -1, 3, 0)


@pytest.mark.slow
def test_rank_formula_over_small_quadratic_fields():
    for d in range(-50, 51):
        if d in (0, 1) or not is_squarefree(d):
            continue
        field = make_field(FieldDescriptor.quadratic(d))
        r1, r2 = field.signature
        candidates = _primes(field, 2, 3, 5)
        for size in range(len(candidates) + 1):
            for S in combinations(candidates, size):
                group = build_sunit_group(field, S)
                assert group.rank == r1 + r2 + len(S) - 1, (d, [P.label for P in S])
