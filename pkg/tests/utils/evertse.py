# -*- coding: utf-8 -*-
from model.solver import SolutionSet
from model.sunit import evertse_bound


def checked(solutions: SolutionSet) -> SolutionSet:
    """
    Assert that a solver run stays within 3 * 7^(3 r1 + 4 r2 + 2 #S) solutions.

    :param solutions: The solutions of one run.
    :return: The same solutions.
    """
    bound = evertse_bound(solutions.field, solutions.primes)
    assert len(solutions) <= bound, f'{len(solutions)} solutions exceed {bound} over {solutions.field.label}'
    return solutions
