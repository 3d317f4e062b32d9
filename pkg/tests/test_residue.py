# -*- coding: utf-8 -*-
from itertools import product

import pytest

from model.errors import DomainError
from model.residue import auxiliary_maps, match_units


def test_rational_maps(rationals):
    maps = auxiliary_maps(rationals, 3, {2, 3})
    assert [m.q for m in maps] == [11, 13, 17]
    assert maps[0].image(rationals.element(['1/2']), 0) == 6


@pytest.mark.parametrize('name', ['q5', 'zeta16plus'])
def test_maps_are_homomorphisms(name, request):
    field = request.getfixturevalue(name)
    maps = auxiliary_maps(field, 3, {2})
    basis = [field.basis_element(i) for i in range(field.degree)]
    samples = basis + [basis[-1] * 3 + 2, field.element(['1/3'] + [1] * (field.degree - 1))]
    for rmap in maps:
        assert rmap.homs == field.degree
        for a, b in product(samples, repeat=2):
            for h in range(rmap.homs):
                assert rmap.image(a * b, h) == rmap.image(a, h) * rmap.image(b, h) % rmap.q
        for a in samples[:-1]:
            assert rmap.norm(a) == field.norm(a) % rmap.q


def test_split_primes_only(zeta16plus):
    # a prime splits completely in Q(zeta16)+ exactly when it is +-1 mod 16
    for rmap in auxiliary_maps(zeta16plus, 4, set()):
        assert rmap.q % 16 in (1, 15)


def test_non_integral_image(rationals):
    rmap, = auxiliary_maps(rationals, 1, set())
    with pytest.raises(DomainError):
        rmap.image(rationals.element([f'1/{rmap.q}']), 0)


def test_match_units_finds_the_exponents(zeta16plus):
    maps = auxiliary_maps(zeta16plus, 4, {2})
    torsion, w = zeta16plus.torsion()
    units = tuple(zeta16plus.element(u) for u in zeta16plus.descriptor.unit_generators)
    u1, u2, u3 = units
    target = -(u1 ** 2) / u2
    assert (1, 2, -1, 0) in match_units(maps, torsion, w, units, target, 2)
