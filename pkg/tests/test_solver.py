# -*- coding: utf-8 -*-
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st
from sympy import factorint

from model.errors import DomainError, PreconditionError
from model.field import FieldDescriptor, embed, make_field
from model.quadratic import is_squarefree
from model.solver import (ObstructionKind, SUnitSolution, _search_box, descent_step, m_value, obstructions, solve,
                          solve_for_primes, verify_solution)
from model.sunit import build_sunit_group, evertse_bound
from utils.evertse import checked
from utils.timer import within_budget

RATIONALS = make_field(FieldDescriptor.rational())
Q5 = make_field(FieldDescriptor.quadratic(5))
P2 = RATIONALS.factor_rational_prime(2)[0]


def _primes(field, *ps):
    return tuple(P for p in ps for P in field.factor_rational_prime(p))


def _smooth(value: Fraction, primes: set[int]) -> bool:
    return set(factorint(value.numerator)) | set(factorint(value.denominator)) <= primes


def _brute_force(primes: set[int], bound: int) -> set[Fraction]:
    """ lambda = +-prod p^e with |e| <= bound and 1 - lambda of the same shape. """
    found = set()
    for sign, exponents in product((1, -1), product(range(-bound, bound + 1), repeat=len(primes))):
        lam = Fraction(sign)
        for p, e in zip(sorted(primes), exponents):
            lam *= Fraction(p) ** e
        if lam != 1 and _smooth(1 - lam, primes):
            found.add(lam)
    return found


def test_rational_two():
    solutions = checked(solve_for_primes(RATIONALS, _primes(RATIONALS, 2), 10))
    assert {s.lam.coords[0] for s in solutions} == {Fraction(2), Fraction(-1), Fraction(1, 2)}
    assert solutions.complete
    assert not solutions.obstructed


def test_rational_two_three_matches_brute_force():
    solutions = checked(solve_for_primes(RATIONALS, _primes(RATIONALS, 2, 3), 20))
    lambdas = {s.lam.coords[0] for s in solutions}
    assert len(solutions) == 21
    assert lambdas == _brute_force({2, 3}, 8)
    assert len(solutions) <= evertse_bound(RATIONALS, solutions.primes)
    for s in solutions:
        assert s.swap().lam in solutions.lambdas()
        assert verify_solution(RATIONALS, solutions.primes, s.lam)


def test_solutions_grow_with_the_bound():
    group = build_sunit_group(RATIONALS, _primes(RATIONALS, 2, 3))
    small = checked(solve(group, 2, check_completeness=False))
    large = checked(solve(group, 6, check_completeness=False))
    assert small.lambdas() <= large.lambdas()
    assert not small.complete


def test_exponent_vectors_unfold(rationals):
    group = build_sunit_group(rationals, _primes(rationals, 2, 3))
    for s in checked(solve(group, 5, check_completeness=False)):
        assert group.unfold(s.lam_exponents) == s.lam
        assert group.unfold(s.mu_exponents) == s.mu


def test_golden_ratio_orbit():
    solutions = checked(solve_for_primes(Q5, (), 6))
    phi = Q5.basis_element(1)
    expected = {1 / phi, phi, 1 / phi ** 2, phi ** 2, -phi, -1 / phi}
    assert solutions.lambdas() == expected
    assert solutions.complete


def test_parallel_sieve_agrees():
    group = build_sunit_group(RATIONALS, _primes(RATIONALS, 2, 3))
    assert checked(solve(group, 6, threads=2)).lambdas() == checked(solve(group, 6)).lambdas()


def test_bound_must_be_positive():
    group = build_sunit_group(RATIONALS, _primes(RATIONALS, 2))
    with pytest.raises(PreconditionError):
        solve(group, 0)


def test_degree_one_prime_above_2_obstructs():
    field = make_field(FieldDescriptor.quadratic(17))
    report = obstructions(field, _primes(field, 3))
    assert report.applies
    assert report.obstructions[0].kind is ObstructionKind.DEGREE_ONE_PRIME_ABOVE_2
    solutions = checked(solve_for_primes(field, _primes(field, 3), 15))
    assert len(solutions) == 0
    assert solutions.obstructed and solutions.complete


def test_three_splits_completely_obstructs():
    field = make_field(FieldDescriptor.quadratic(13))
    report = obstructions(field, ())
    assert [o.kind for o in report.obstructions if o.applicable] == [ObstructionKind.THREE_SPLITS_COMPLETELY]
    assert not obstructions(Q5, ()).applies


def test_verify_solution_domain():
    with pytest.raises(DomainError):
        verify_solution(RATIONALS, (P2,), RATIONALS.one)
    assert not verify_solution(RATIONALS, (P2,), RATIONALS.from_rational(3))


def test_solution_must_sum_to_one():
    with pytest.raises(DomainError):
        SUnitSolution(RATIONALS.from_rational(2), RATIONALS.from_rational(2))


def test_descent_step_example():
    delta = RATIONALS.from_rational(3)
    sol = SUnitSolution(RATIONALS.from_rational(-8), RATIONALS.from_rational(9))
    step = descent_step(sol, P2, delta)
    assert step.lam == 4
    assert step.mu == -3
    assert m_value(sol, P2) == 3
    assert m_value(step, P2) == 2


@given(st.integers(-999, 999).filter(lambda x: x % 2 and abs(x) > 1))
def test_descent_step_growth(x):
    delta = RATIONALS.from_rational(x)
    sol = SUnitSolution(1 - delta * delta, delta * delta)
    m = m_value(sol, P2)
    assert m >= 3
    assert m_value(descent_step(sol, P2, delta), P2) == 2 * m - 4


@given(st.lists(st.integers(-4, 4), min_size=2, max_size=2).filter(lambda c: c not in ([0, 0], [1, 0], [-1, 0])))
def test_descent_step_solves_the_equation(coords):
    delta = Q5.element(coords)
    sol = SUnitSolution(1 - delta * delta, delta * delta)
    step = descent_step(sol, Q5.factor_rational_prime(2)[0], delta)
    assert step.lam + step.mu == 1


def test_descent_step_preconditions():
    sol = SUnitSolution(RATIONALS.from_rational(-8), RATIONALS.from_rational(9))
    with pytest.raises(PreconditionError):
        descent_step(sol, P2, RATIONALS.from_rational(2))
    with pytest.raises(PreconditionError):
        descent_step(sol, RATIONALS.factor_rational_prime(3)[0], RATIONALS.from_rational(3))


def test_descent_step_within_a_group():
    group = build_sunit_group(RATIONALS, _primes(RATIONALS, 2, 3))
    step = descent_step(SUnitSolution(RATIONALS.from_rational(-8), RATIONALS.from_rational(9)), P2,
                        RATIONALS.from_rational(3), group)
    assert verify_solution(RATIONALS, group.primes, step.lam)
    assert group.unfold(step.lam_exponents) == 4
    assert group.unfold(step.mu_exponents) == -3

    with pytest.raises(PreconditionError):
        descent_step(SUnitSolution(RATIONALS.from_rational(-24), RATIONALS.from_rational(25)), P2,
                     RATIONALS.from_rational(5), group)

    odd = build_sunit_group(RATIONALS, _primes(RATIONALS, 3))
    with pytest.raises(PreconditionError):
        descent_step(SUnitSolution(RATIONALS.from_rational(-8), RATIONALS.from_rational(9)), P2,
                     RATIONALS.from_rational(3), odd)


def test_odd_primes_congruent_to_one_mod_12_keep_two_small():
    # every solution for S = {2, 11, 13} has |ord_2| <= 1
    solutions = checked(solve_for_primes(RATIONALS, _primes(RATIONALS, 2, 11, 13), 10, check_completeness=False))
    assert len(solutions) > 0
    assert all(m_value(s, P2) <= 1 for s in solutions)


@pytest.mark.slow
@within_budget(seconds=600)
def test_obstructed_fields_have_no_solutions():
    for d in range(-100, 101):
        if d in (0, 1) or not is_squarefree(d):
            continue
        field = make_field(FieldDescriptor.quadratic(d))
        for primes in ((), _primes(field, 3)):
            if not obstructions(field, primes).applies:
                continue
            found, _, _ = _search_box(build_sunit_group(field, primes), 15, 1, 2 * 10 ** 8)
            assert not found, (d, [P.label for P in primes])


@pytest.mark.slow
@within_budget(seconds=600)
def test_zeta16plus(zeta16plus):
    solutions = checked(solve_for_primes(zeta16plus, zeta16plus.factor_rational_prime(2), 20, threads=4))
    assert len(solutions) == 585
    assert solutions.complete


@pytest.mark.slow
@within_budget(seconds=1800)
def test_zeta16_contains_the_real_subfield(zeta16plus, zeta16):
    real = checked(solve_for_primes(zeta16plus, zeta16plus.factor_rational_prime(2), 20, threads=4))
    full = checked(solve_for_primes(zeta16, zeta16.factor_rational_prime(2), 18, threads=4))
    assert len(full) == 795
    zeta = zeta16.basis_element(1)
    images = [(zeta - zeta ** 7) ** k for k in range(4)]
    assert {embed(lam, zeta16, images) for lam in real.lambdas()} <= full.lambdas()
