from fractions import Fraction

import mpmath
import pytest

from retakh import constants
from retakh import common_utils
from retakh import gf_utils
from retakh import asymptotic_utils
from retakh import convergence_utils
from retakh.asymptotic_utils import AsymptoticComparison
from retakh.errors import DomainError


def test_motzkin_formula():
    expected = mpmath.power(3, mpmath.mpf(3) / 2) / (2 * mpmath.sqrt(mpmath.pi))
    assert mpmath.almosteq(asymptotic_utils.motzkin_asym(1), expected)


def test_large_arguments_stay_finite():
    value = asymptotic_utils.motzkin_asym(5000)
    assert mpmath.isfinite(value)
    assert value > 0
    assert mpmath.isfinite(asymptotic_utils.height_numerator_asym_coeff(5000))


def test_linear_and_square_root_laws():
    assert mpmath.almosteq(asymptotic_utils.avg_leaves_asym(9), 4)
    assert mpmath.almosteq(asymptotic_utils.unrestricted_leaves_asym(9), mpmath.mpf(9) / 2)
    assert mpmath.almosteq(asymptotic_utils.avg_height_asym(3), 2 * mpmath.sqrt(mpmath.pi))
    assert mpmath.almosteq(
        asymptotic_utils.avg_height_asym(12), 2 * asymptotic_utils.motzkin_path_height_ref(12)
    )
    assert mpmath.almosteq(asymptotic_utils.height_numerator_asym_coeff(4), mpmath.mpf(81) / 4)


@pytest.mark.parametrize('evaluator', [
    asymptotic_utils.motzkin_asym,
    asymptotic_utils.avg_height_asym,
    asymptotic_utils.avg_leaves_asym,
    asymptotic_utils.height_numerator_asym_coeff
])
def test_positive_arguments_only(evaluator):
    with pytest.raises(DomainError):
        evaluator(0)


def test_comparison_ratio():
    comparison = AsymptoticComparison('motzkin', 3, Fraction(1, 2), mpmath.mpf(1))
    assert comparison.ratio == mpmath.mpf(1) / 2
    assert comparison.abs_error == mpmath.mpf(1) / 2
    assert comparison.to_row()['ratio'] == '0.5'


# ########### #
# CONVERGENCE #
# ########### #

def test_compare_motzkin():
    comparison = convergence_utils.compare_motzkin(200)
    assert comparison.exact == gf_utils.motzkin_number(199)
    assert comparison.abs_error < 0.05
    assert comparison.abs_error < convergence_utils.compare_motzkin(50).abs_error


def test_compare_leaves():
    assert convergence_utils.compare_avg_leaves(1000).abs_error < 0.02


def test_compare_unknown_kind():
    with pytest.raises(DomainError):
        convergence_utils.compare('depth', 10)


def test_scan_table():
    scan = convergence_utils.convergence_scan(constants.comparison_motzkin, [20, 40, 80, 160])
    assert list(scan.columns) == ['n', 'exact', 'asymptotic', 'ratio', 'abs_error']
    assert scan['n'].tolist() == [20, 40, 80, 160]
    assert scan['exact'].iloc[0] == common_utils.format_float(gf_utils.motzkin_number(19))
    assert convergence_utils.ladder_violations(scan['abs_error'].tolist(), start=0) == 0


@pytest.mark.parametrize('errors, start, expected', [
    ([0.5, 0.3, 0.4, 0.2], 0, 1),
    ([0.5, 0.6, 0.3], 0, 1),
    ([0.5, 0.6, 0.3], 1, 0),
    ([0.1], 1, 0)
])
def test_ladder_violations(errors, start, expected):
    assert convergence_utils.ladder_violations(errors, start) == expected


@pytest.mark.slow
@pytest.mark.parametrize('kind', constants.possible_comparisons)
def test_frozen_tolerances(kind):
    n, tol = constants.tolerances[kind]
    assert convergence_utils.compare(kind, n).abs_error < tol

    scan = convergence_utils.convergence_scan(kind)
    assert convergence_utils.ladder_violations(scan['abs_error'].tolist()) <= \
        constants.allowed_ladder_violations[kind]
