# -*- coding: utf-8 -*-
from model.criteria import CriterionReport, Mode, Verdict, afc_verdict, ko_verdict, stu_sets
from model.curve import LambdaOrbit, LegendreCurve, orbit_classes, s3_orbit
from model.field import Field, FieldDescriptor, FieldElement, PrimeIdealData, make_field
from model.newform import NewformRecord, load_newforms
from model.serre_mazur import ExponentBound, classify_conductor_2L, exponent_bound_for_L
from model.solver import SolutionSet, SUnitSolution, obstructions, solve
from model.sunit import SUnitGroup, build_sunit_group

__all__ = [
    'CriterionReport',
    'ExponentBound',
    'Field',
    'FieldDescriptor',
    'FieldElement',
    'LambdaOrbit',
    'LegendreCurve',
    'Mode',
    'NewformRecord',
    'PrimeIdealData',
    'SUnitGroup',
    'SUnitSolution',
    'SolutionSet',
    'Verdict',
    'afc_verdict',
    'build_sunit_group',
    'classify_conductor_2L',
    'exponent_bound_for_L',
    'ko_verdict',
    'load_newforms',
    'make_field',
    'obstructions',
    'orbit_classes',
    's3_orbit',
    'solve',
    'stu_sets',
]
