# -*- coding: utf-8 -*-
import pytest

from model.criteria import (HEURISTIC_CAVEAT, INCOMPLETE_CAVEAT, ESStatus, GeneralizedCoefficients, Mode, Verdict,
                            afc_verdict, ds_verdict, es_status, generalized_omega_check, is_wieferich, ko_sets,
                            ko_verdict, layer_verdict, stu_sets)
from model.errors import HypothesisViolationError, PreconditionError
from model.field import FieldDescriptor, make_field
from model.solver import ObstructionKind, SolutionSet, SUnitSolution, solve_for_primes
from utils.evertse import checked


def test_verdicts():
    assert Verdict.__numbers__() == ['AFC-holds', 'AFC-holds-conditionally', 'inconclusive']
    assert [v.exit_code for v in Verdict] == [0, 2, 3]
    assert Mode('layer-rule') is Mode.LAYER


@pytest.mark.parametrize('d, T, U', [(5, 0, 1), (17, 2, 2), (2, 1, 1), (-1, 1, 1)])
def test_stu_sets(d, T, U):
    field = make_field(FieldDescriptor.quadratic(d))
    sets = stu_sets(field)
    assert (len(sets.T), len(sets.U)) == (T, U)


def test_es_status(rationals, q5, zeta16plus):
    assert es_status(rationals, stu_sets(rationals)) is ESStatus.DEGREE_ODD
    assert es_status(q5, stu_sets(q5)) is ESStatus.CONJECTURE_ASSUMED
    assert es_status(zeta16plus, stu_sets(zeta16plus)) is ESStatus.T_NONEMPTY


def test_rationals_hold(rationals):
    solutions = checked(solve_for_primes(rationals, stu_sets(rationals).S, 10))
    report = afc_verdict(rationals, solutions)
    assert report.verdict is Verdict.HOLDS
    assert report.caveats == (HEURISTIC_CAVEAT,)
    assert all(r.condition == 'A' for r in report.records)
    assert report.to_dict()['verdict'] == 'AFC-holds'


def test_reports_carry_the_unit_equation_obstructions(rationals, q5):
    report = afc_verdict(rationals, checked(solve_for_primes(rationals, stu_sets(rationals).S, 10)))
    obstructions = report.details['obstructions']
    assert not obstructions['applies']
    assert [o['name'] for o in obstructions['obstructions']] == [kind.value for kind in ObstructionKind]
    solutions = SolutionSet(q5, stu_sets(q5).S, (), 1, complete=True, obstructed=True)
    assert afc_verdict(q5, solutions).to_dict()['obstructions']['applies'] is False


def test_incomplete_search_is_inconclusive(rationals):
    solutions = checked(solve_for_primes(rationals, stu_sets(rationals).S, 10, check_completeness=False))
    report = afc_verdict(rationals, solutions)
    assert report.verdict is Verdict.INCONCLUSIVE
    assert report.caveats == (INCOMPLETE_CAVEAT,)


def test_failing_solution(rationals):
    sol = SUnitSolution(rationals.from_rational(33), rationals.from_rational(-32))
    solutions = SolutionSet(rationals, tuple(stu_sets(rationals).S), (sol,), 1, complete=True)
    report = afc_verdict(rationals, solutions)
    assert report.verdict is Verdict.INCONCLUSIVE
    assert report.records[0].condition is None
    assert report.caveats == ('1 solutions satisfy neither condition',)
    assert report.exit_code == 3


def test_obstructed_equation_holds_conditionally(q5):
    solutions = SolutionSet(q5, stu_sets(q5).S, (), 1, complete=True, obstructed=True)
    report = afc_verdict(q5, solutions)
    assert report.verdict is Verdict.HOLDS_CONDITIONALLY
    assert report.assumed == ('Eichler-Shimura',)
    assert report.exit_code == 2


def test_solutions_need_the_primes_above_2(rationals):
    solutions = checked(solve_for_primes(rationals, rationals.factor_rational_prime(3), 4))
    with pytest.raises(PreconditionError):
        afc_verdict(rationals, solutions)


def test_generalized_equation(rationals):
    coeffs = GeneralizedCoefficients(1, 1, 3)
    sets = ko_sets(rationals, coeffs)
    assert [P.p for P in sets.S] == [2, 3]
    report = ko_verdict(rationals, coeffs, checked(solve_for_primes(rationals, sets.S, 10)))
    assert report.verdict is Verdict.HOLDS
    assert report.assumed == ()
    assert all(r.condition == 'A' for r in report.records)
    assert not report.details['obstructions']['applies']


def test_generalized_hypotheses(rationals):
    with pytest.raises(HypothesisViolationError):
        ko_sets(rationals, GeneralizedCoefficients(1, 2, 3))
    with pytest.raises(PreconditionError):
        GeneralizedCoefficients(1, 0, 3)
    assert generalized_omega_check(GeneralizedCoefficients(1, 1, 3))
    assert not generalized_omega_check(GeneralizedCoefficients(1, 1, 2))


@pytest.mark.parametrize('coeffs, verdict', [
    ((1, 1, 11), Verdict.HOLDS),
    ((1, 1, 11 * 13 * 23), Verdict.HOLDS),
    ((1, 1, 5), Verdict.INCONCLUSIVE),
])
def test_congruence_criterion(coeffs, verdict):
    assert ds_verdict(GeneralizedCoefficients(*coeffs), 3).verdict is verdict


def test_congruence_needs_an_odd_prime():
    with pytest.raises(PreconditionError):
        ds_verdict(GeneralizedCoefficients(1, 1, 11), 2)


def test_wieferich():
    assert is_wieferich(1093)
    assert is_wieferich(3511)
    assert not is_wieferich(5)


@pytest.mark.parametrize('l, n, verdict', [
    (2, 3, Verdict.HOLDS),
    (5, 1, Verdict.HOLDS),
    (3, 1, Verdict.INCONCLUSIVE),
    (1093, 1, Verdict.INCONCLUSIVE),
])
def test_layer_rule(l, n, verdict):
    assert layer_verdict(l, n).verdict is verdict


def test_layer_must_be_positive():
    with pytest.raises(PreconditionError):
        layer_verdict(5, 0)


@pytest.mark.slow
def test_zeta16plus_holds(zeta16plus):
    solutions = checked(solve_for_primes(zeta16plus, stu_sets(zeta16plus).S, 20, threads=4))
    report = afc_verdict(zeta16plus, solutions)
    assert report.verdict is Verdict.HOLDS
    assert all(r.condition == 'A' for r in report.records)
