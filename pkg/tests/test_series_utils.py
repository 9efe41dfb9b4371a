from fractions import Fraction

import pytest

from hypothesis import assume, given, strategies as st

from retakh import series_utils
from retakh.series_utils import BivarSeries, Series, solve_fixed_point
from retakh.errors import (
    CoefficientIndexError,
    CompositionError,
    DomainError,
    FixedPointDivergenceError,
    NonUnitDivisionError,
    OrderMismatchError,
    UnsupportedBranchError
)

ORDER = 7

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=6)
series_strategy = st.lists(coefficients, min_size=1, max_size=ORDER + 1).map(lambda c: Series(c, ORDER))


# ############ #
# CONSTRUCTION #
# ############ #

def test_missing_coefficients_are_zero():
    s = Series([1, 2], 4)
    assert s.order == 4
    assert s.coeffs == (1, 2, 0, 0, 0)


def test_too_many_coefficients():
    with pytest.raises(DomainError):
        Series([1, 2, 3], 1)


def test_rational_strings_and_no_floats():
    assert Series(['1/2', 3]).coeff(0) == Fraction(1, 2)
    with pytest.raises(TypeError):
        Series([0.5])


def test_coefficient_index():
    s = Series([1, 2])
    assert s[1] == 2
    with pytest.raises(CoefficientIndexError):
        s.coeff(2)
    with pytest.raises(IndexError):
        s.coeff(-1)


def test_valuation():
    assert Series([0, 0, 3, 1]).valuation() == 2
    assert Series.zero(3).valuation() is None


def test_str_and_repr():
    assert str(Series([1, -2, '1/2'])) == '1 + -2*z + 1/2*z^2'
    assert repr(Series([1, 2])) == "Series(['1', '2'], order=1)"


# ########## #
# ARITHMETIC #
# ########## #

def test_orders_do_not_mix():
    with pytest.raises(OrderMismatchError):
        Series([1], 0) + Series([1, 1])


def test_scalars_are_constants():
    s = Series([1, 2])
    assert s + 1 == Series([2, 2])
    assert 1 - s == Series([0, -2])
    assert 2 * s == Series([2, 4])
    assert s / 2 == Series(['1/2', 1])


def test_geometric_series():
    one_minus_z = Series([1, -1], 5)
    assert one_minus_z.inverse() == Series([1] * 6)
    assert 1 / one_minus_z == Series([1] * 6)


def test_non_unit_division():
    with pytest.raises(NonUnitDivisionError):
        Series([1, 1], 3) / Series.variable(3)
    with pytest.raises(ZeroDivisionError):
        Series([1, 1]) / 0


def test_powers():
    assert Series([1, 1], 4) ** 3 == Series([1, 3, 3, 1], 4)
    assert Series([1, 1], 4) ** 0 == Series.one(4)
    with pytest.raises(DomainError):
        Series([1, 1]) ** -1


def test_shift():
    assert Series([1, 2, 3]).shift(1) == Series([0, 1, 2])
    assert Series([0, 0, 1, 2]).shift(-2) == Series([1, 2])
    with pytest.raises(DomainError):
        Series([1, 2]).shift(-1)


def test_truncate_and_pad():
    s = Series([1, 2, 3])
    assert s.truncate(1) == Series([1, 2])
    assert s.truncate(4) == Series([1, 2, 3], 4)


def test_sqrt():
    assert Series([1, 2, 1], 6).sqrt() == Series([1, 1], 6)
    with pytest.raises(UnsupportedBranchError):
        Series([4, 1], 3).sqrt()


def test_compose():
    ones = Series([1] * 7)
    assert ones.compose(Series([0, 2], 6)) == Series([2 ** k for k in range(7)])
    with pytest.raises(CompositionError):
        ones.compose(Series([1, 1], 6))
    with pytest.raises(TypeError):
        ones.compose(3)


def test_functional_version():
    a = Series([1, 1], 3)
    b = Series([1, -1], 3)
    assert series_utils.add(a, b) == Series([2], 3)
    assert series_utils.mul(a, b) == Series([1, 0, -1], 3)
    assert series_utils.div(series_utils.mul(a, b), b) == a
    assert series_utils.sqrt(a * a) == a
    assert series_utils.compose(a, Series.variable(3)) == a
    assert series_utils.coeff(a, 1) == 1


@given(series_strategy, series_strategy)
def test_product_commutes(a, b):
    assert a * b == b * a


@given(series_strategy, series_strategy, series_strategy)
def test_product_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(series_strategy, series_strategy)
def test_division_undoes_product(a, b):
    assume(b.coeff(0) != 0)
    assert (a / b) * b == a
    assert (a * b) / b == a


@given(series_strategy)
def test_square_root_squares_back(a):
    a = a - a.coeff(0) + 1
    root = a.sqrt()
    assert root.coeff(0) == 1
    assert root * root == a


@given(series_strategy)
def test_compose_with_identity(a):
    assert a.compose(Series.variable(ORDER)) == a


def test_compose_square():
    z_squared = Series([0, 0, 1], 6)
    assert z_squared.compose(Series([0, 1, 1], 6)) == Series([0, 0, 1, 2, 1], 6)


@given(series_strategy, series_strategy, series_strategy)
def test_compose_associates(a, b, c):
    b = b - b.coeff(0)
    c = c - c.coeff(0)
    assert a.compose(b.compose(c)) == a.compose(b).compose(c)


# ########### #
# FIXED POINT #
# ########### #

def test_fixed_point_geometric():
    assert solve_fixed_point(lambda x: 1 + x.shift(1), 5) == Series([1] * 6)


def test_fixed_point_joint():
    f, g = solve_fixed_point(
        lambda fg: (1 + fg[1].shift(1), 1 + fg[0].shift(1)),
        4,
        (Series.zero(0), Series.zero(0))
    )
    assert f == g == Series([1] * 5)


def test_fixed_point_must_contract():
    with pytest.raises(FixedPointDivergenceError):
        solve_fixed_point(lambda x: x + 1, 3)


def test_fixed_point_must_keep_order():
    with pytest.raises(OrderMismatchError):
        solve_fixed_point(lambda x: x.truncate(x.order + 1) + 1, 3)


# ######### #
# BIVARIATE #
# ######### #

def test_u_degree_bounded_by_z_degree():
    BivarSeries([[1], [0, 1]])
    with pytest.raises(DomainError):
        BivarSeries([[0, 1]])


def test_specialize_marked_variable():
    zu = BivarSeries.marked_variable(3)
    assert zu.evaluate(1) == Series.variable(3)
    assert zu.evaluate(2) == Series([0, 2], 3)
    assert (zu * zu).derivative_at(1) == Series([0, 0, 2], 3)


def test_bivariate_inverse_and_sqrt():
    one_minus_zu = 1 - BivarSeries.marked_variable(4)
    assert one_minus_zu.inverse().evaluate(1) == Series([1] * 5)

    square = BivarSeries([[1], [0, 2], [0, 0, 1]])
    assert square.sqrt() == BivarSeries([[1], [0, 1]], 2)


def test_lift_univariate():
    lifted = BivarSeries.from_series(Series([1, 0, 3]))
    assert lifted.rows == ((1,), (), (3,))
    assert lifted.evaluate(5) == Series([1, 0, 3])


def test_bivariate_str():
    assert str(BivarSeries([[1], [0, 1]])) == '(1) + (0 + 1*u)*z'
