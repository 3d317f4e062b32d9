# -*- coding: utf-8 -*-
import os
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SRC = os.path.join(ROOT, 'src')
sys.path.insert(0, SRC)
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from model.field import Field, FieldDescriptor, make_field  # noqa: E402

FIXTURES_DIR = os.path.join(SRC, 'data')


def load_fixture_field(name: str) -> Field:
    return make_field(FieldDescriptor.load(os.path.join(FIXTURES_DIR, 'fields', f'{name}.json')))


@pytest.fixture(scope='session')
def fixtures_dir() -> str:
    return FIXTURES_DIR


@pytest.fixture(scope='session')
def rationals() -> Field:
    return make_field(FieldDescriptor.rational())


@pytest.fixture(scope='session')
def q5() -> Field:
    return make_field(FieldDescriptor.quadratic(5))


@pytest.fixture(scope='session')
def zeta16plus() -> Field:
    return load_fixture_field('zeta16plus')


@pytest.fixture(scope='session')
def zeta16() -> Field:
    return load_fixture_field('zeta16')
