# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from config import Config
from core.survey import SKIPPED, Family, ScanSettings, squarefree_scan
from model.criteria import Verdict
from model.errors import PreconditionError
from model.quadratic import Splitting, is_squarefree, splitting_of_2

SPLITTING_ONLY = ScanSettings(splitting_only=True)


def test_families():
    assert Family.__numbers__() == ['real', 'imaginary']


def test_settings_from_config():
    settings = ScanSettings.from_config(Config({'survey_bound': 4}), splitting_only=True)
    assert settings.bound == 4
    assert settings.splitting_only
    assert ScanSettings.from_config(Config(), bound=9).bound == 9


def test_scan_limit():
    with pytest.raises(PreconditionError):
        squarefree_scan(1, Family.REAL)


def test_splitting_counts():
    report = squarefree_scan(200, Family.REAL, SPLITTING_ONLY)
    assert [o.d for o in report.fields] == [d for d in range(2, 201) if is_squarefree(d)]
    assert sum(report.splitting.values()) == report.total
    assert sum(report.splitting_proportions.values()) == 1
    assert report.verdicts == {}
    for outcome in report.fields:
        assert outcome.splitting is splitting_of_2(outcome.d)
        assert outcome.verdict is None


def test_imaginary_radicands_are_negative():
    report = squarefree_scan(10, Family.IMAGINARY, SPLITTING_ONLY)
    assert [o.d for o in report.fields] == [-2, -3, -5, -6, -7, -10]
    assert report.splitting == {'split': 1, 'inert': 1, 'ramified': 4}
    summary = report.to_dict(with_fields=False)
    assert 'fields' not in summary
    assert summary['splitting_proportions']['split'] == '1/6'


def test_workers_do_not_change_the_report():
    one = squarefree_scan(300, Family.IMAGINARY, SPLITTING_ONLY)
    two = squarefree_scan(300, Family.IMAGINARY, SPLITTING_ONLY, threads=2)
    assert one == two
    assert one.fields == two.fields


def test_imaginary_pipeline():
    report = squarefree_scan(10, Family.IMAGINARY, ScanSettings(bound=4))
    assert sum(report.verdicts.values()) == report.total
    skipped = report.fields[1]
    assert (skipped.d, skipped.verdict) == (-3, SKIPPED)
    assert 'cube root' in skipped.reason
    allowed = set(Verdict.__numbers__()) | {SKIPPED}
    assert all(o.verdict in allowed for o in report.fields)


def test_real_pipeline():
    report = squarefree_scan(2, Family.REAL, ScanSettings(bound=4))
    outcome, = report.fields
    assert (outcome.d, outcome.splitting) == (2, Splitting.RAMIFIED)
    assert outcome.verdict in Verdict.__numbers__()


@pytest.mark.slow
def test_inert_density():
    report = squarefree_scan(10 ** 5, Family.IMAGINARY, SPLITTING_ONLY, threads=4)
    assert abs(report.splitting_proportions['inert'] - Fraction(1, 6)) <= Fraction(2, 100)


REAL_SNAPSHOT_INCONCLUSIVE = (5, 17, 33, 41)
# 2 is inert in these, so T is empty
REAL_SNAPSHOT_CONDITIONAL = (13, 21, 29, 37)


@pytest.mark.slow
def test_real_scan_snapshot():
    settings = ScanSettings(bound=6)
    report = squarefree_scan(50, Family.REAL, settings, threads=2)
    assert report == squarefree_scan(50, Family.REAL, settings)
    assert report.verdicts == {'AFC-holds': 22, 'AFC-holds-conditionally': 4, 'inconclusive': 4}
    expected = {
        d: 'inconclusive' if d in REAL_SNAPSHOT_INCONCLUSIVE
        else 'AFC-holds-conditionally' if d in REAL_SNAPSHOT_CONDITIONAL
        else 'AFC-holds'
        for d in range(2, 51) if is_squarefree(d)
    }
    assert {o.d: o.verdict for o in report.fields} == expected
