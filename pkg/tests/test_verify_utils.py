import pytest

from retakh import gf_utils
from retakh import verify_utils
from retakh import constants
from retakh.errors import ConsistencyError, DomainError


def test_quick_level_passes():
    results = verify_utils.run_checks('quick')
    assert [r.name for r in results] == [name for name, _ in verify_utils.checks]
    failed = [r.to_row() for r in results if not r.passed]
    assert failed == []


def test_unknown_level():
    with pytest.raises(DomainError):
        verify_utils.run_checks('thorough')


def test_library_errors_fail_one_check(monkeypatch):
    def broken(order):
        raise ConsistencyError('broken on purpose')

    monkeypatch.setattr(gf_utils, 'total_gf', broken)
    results = {r.name: r for r in verify_utils.run_checks('quick')}

    assert not results['total_gf'].passed
    assert results['total_gf'].detail == 'ConsistencyError: broken on purpose'
    assert results['motzkin_closed_form'].passed


def test_wrong_trinomial_row_is_caught(monkeypatch):
    original = gf_utils.trinomial_row
    values = list(original(4).values)
    values[3] += 1

    def tampered(n):
        if n == 4:
            return gf_utils.TrinomialRow(4, tuple(values))
        return original(n)

    monkeypatch.setattr(gf_utils, 'trinomial_row', tampered)
    passed, detail = verify_utils.check_trinomial_rows(constants.verify_levels['quick'])
    assert not passed
    assert 'row 4' in detail


def test_scan_check_reports_tolerance(monkeypatch):
    monkeypatch.setitem(constants.tolerances, constants.comparison_avg_leaves, (100, 1e-9))
    check = dict(verify_utils.scan_checks)['asymptotic_avg_leaves']
    passed, detail = check(constants.verify_levels['quick'])
    assert not passed
    assert 'exceeds' in detail
