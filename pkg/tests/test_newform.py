# -*- coding: utf-8 -*-
import os

import pytest
from sympy import Poly, symbols

from model.errors import ParseError, PreconditionError
from model.newform import NewformRecord, load_newforms


def _form(field_poly, eigenvalues, **extra):
    return {'label': 'test.2.a.a', 'level': 74, 'weight': 2, 'field_poly': field_poly,
            'eigenvalues': eigenvalues, **extra}


def _level(fixtures_dir, level):
    return load_newforms(os.path.join(fixtures_dir, 'newforms', f'level_{level}.json'))


@pytest.mark.parametrize('level', [2, 6, 10, 22])
def test_empty_levels(fixtures_dir, level):
    assert _level(fixtures_dir, level) == []


def test_rational_form(fixtures_dir):
    form, = _level(fixtures_dir, 14)
    assert form.label == '14.2.a.a'
    assert form.is_rational
    assert form.rational_eigenvalue(3) == -2
    with pytest.raises(PreconditionError):
        form.rational_eigenvalue(2)


def test_irrational_forms(fixtures_dir):
    forms = _level(fixtures_dir, 74)
    assert [f.label for f in forms] == ['74.2.a.a', '74.2.a.b']
    assert not any(f.is_rational for f in forms)
    y = symbols('y')
    assert forms[0].characteristic_polynomial(3) == Poly(y ** 2 - 3, y)
    with pytest.raises(PreconditionError):
        forms[0].rational_eigenvalue(3)



def test_mersenne_level_forms(fixtures_dir):
    forms = _level(fixtures_dir, 62)
    assert [f.label for f in forms] == ['62.2.a.a', '62.2.a.b']
    assert [f.is_rational for f in forms] == [True, False]
    y = symbols('y')
    assert forms[1].characteristic_polynomial(3) == Poly(y ** 2 - 2 * y - 2, y)
    assert forms[1].characteristic_polynomial(7) == Poly((y - 2) ** 2, y)

@pytest.mark.parametrize('data', [
    _form([0, 1], {'3': [4]}),
    _form([-20, 0, 1], {'3': [0, 1]}),
    _form([1, 0, 1], {'3': [0, 1]}),
    _form([0, 1], {'3': [1]}, weight=4),
    _form([0, 2], {'3': [1]}),
    {'label': 'test.2.a.a', 'level': 74},
])
def test_invalid_records(data):
    with pytest.raises(ParseError):
        NewformRecord.from_dict(data)


def test_record_survives_its_json_form(fixtures_dir):
    for form in _level(fixtures_dir, 74) + _level(fixtures_dir, 26):
        assert NewformRecord.from_dict(form.to_dict()) == form
