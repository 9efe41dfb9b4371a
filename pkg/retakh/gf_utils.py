"""
This module contains the generating functions of restricted paths and
trees, their closed forms in the substitution variable v (with
z = v / (1 + v + v^2), so that v = zM(z)), and the exact coefficient
formulas in terms of trinomial coefficients.

Everything is exact. Series routes are used up to moderate orders, the
trinomial formulas take over for large n.
"""
import time
import functools

from fractions import Fraction
from dataclasses import dataclass
from typing import Optional, Tuple

import mpmath
import sympy

from retakh import constants
from retakh import common_utils
from retakh import path_utils
from retakh import asymptotic_utils
from retakh.series_utils import BivarSeries, Series, solve_fixed_point
from retakh.errors import ConsistencyError, DomainError


def _check_order(order, minimum=0):
    if type(order) is not int or order < minimum:
        raise DomainError('Order must be an integer >= {}, got {!r}'.format(minimum, order))


# ####### #
# MOTZKIN #
# ####### #

@functools.lru_cache(maxsize=None)
def motzkin_series(order):
    """ Solution of M = 1 + zM + z^2 M^2 by fixed point iteration.

    :param order: (int) truncation order
    :return: (Series) the Motzkin numbers M_0..M_order
    """

    _check_order(order)
    m = solve_fixed_point(lambda x: 1 + x.shift(1) + (x * x).shift(2), order)

    if constants.DO_SANITY_CHECKS and m != motzkin_closed_form(order):
        raise ConsistencyError('Motzkin fixed point differs from the closed form at order {}'.format(order))

    return m


def motzkin_closed_form(order):
    """ M(z) = (1 - z - sqrt(1 - 2z - 3z^2)) / (2z^2) through the series square root.

    :param order: (int) truncation order
    :return: (Series) Motzkin series
    """

    _check_order(order)
    wide = order + 2
    root = Series([1, -2, -3], wide).sqrt()
    numerator = 1 - Series.variable(wide) - root
    return numerator.shift(-2).scale(Fraction(1, 2))


def solve_fg(order):
    """ Joint fixed point of F = zG / (1 - G) and G = z / (1 - F).

    F counts the trees hanging below level one (counted in nodes),
    G the ones ending on an even level.

    :param order: (int) truncation order
    :return: (Series, Series) F and G
    """

    _check_order(order)

    def update(fg):
        f, g = fg
        return g.shift(1) / (1 - g), Series.variable(f.order) / (1 - f)

    f, g = solve_fixed_point(update, order, (Series.zero(0), Series.zero(0)))

    if constants.DO_SANITY_CHECKS and f != motzkin_series(order).shift(2):
        raise ConsistencyError('F differs from z^2 M(z) at order {}'.format(order))

    return f, g


def total_gf(order):
    """ Generating function of all restricted trees by number of nodes.

    Evaluates z/(1-z) * 1/(1 - F/(1-z)) and checks it against zM(z).

    :param order: (int) truncation order
    :return: (Series) zM(z)
    """

    _check_order(order)
    z = Series.variable(order)
    f, _ = solve_fg(order)

    one_minus_z = 1 - z
    total = (z / one_minus_z) / (1 - f / one_minus_z)

    if total != motzkin_series(order).shift(1):
        raise ConsistencyError('Total generating function differs from zM(z) at order {}'.format(order))

    return total


@functools.lru_cache(maxsize=None)
def v_series(order):
    """ Solution of v = z(1 + v + v^2), equal to zM(z).

    :param order: (int) truncation order
    :return: (Series) v as a series in z
    """

    _check_order(order)
    return solve_fixed_point(lambda v: (1 + v + v * v).shift(1), order)


# ################## #
# HEIGHT RESTRICTION #
# ################## #

def _g_k_exponents(k):
    return 2 * k, 2 * k + 1


def g_k(k, order):
    """ Trees ending on an even level, height bounded by 2k.

    Closed form v/(1+v) * (1 - v^(2k)) / (1 - v^(2k+1)) evaluated on the
    v series.

    :param k: (int) k >= 1
    :param order: (int) truncation order
    :return: (Series) G_k
    """

    if type(k) is not int or k < 1:
        raise DomainError('k must be a positive integer, got {!r}'.format(k))
    _check_order(order)

    v = v_series(order)
    low, high = _g_k_exponents(k)
    return v / (1 + v) * (1 - v ** low) / (1 - v ** high)


def f_k(k, order):
    """ Trees hanging below level one of height at most 2k, counted in nodes.

    Closed form v^2/(1+v+v^2) * (1 - v^(2k)) / (1 - v^(2k+2)).

    :param k: (int) k >= 1
    :param order: (int) truncation order
    :return: (Series) F_k
    """

    if type(k) is not int or k < 1:
        raise DomainError('k must be a positive integer, got {!r}'.format(k))
    _check_order(order)

    v = v_series(order)
    return v * v / (1 + v + v * v) * (1 - v ** (2 * k)) / (1 - v ** (2 * k + 2))


def height_le_gf(h, order):
    """ Restricted trees of height at most 2h (at most 1 for h = 0), by nodes.

    v (1 - v^(2h+2)) / (1 - v^(2h+4)); for h = 0 this is v/(1+v^2) = z/(1-z).
    Once 2h >= order the result is v itself.

    :param h: (int) h >= 0
    :param order: (int) truncation order
    :return: (Series) height bounded generating function
    """

    if type(h) is not int or h < 0:
        raise DomainError('h must be a non negative integer, got {!r}'.format(h))
    _check_order(order)

    v = v_series(order)
    if h == 0:
        return v / (1 + v * v)
    return v * (1 - v ** (2 * h + 2)) / (1 - v ** (2 * h + 4))


# ######## #
# DIVISORS #
# ######## #

def divisor_count(h):
    """ Number of positive divisors of h.

    :param h: (int) h >= 1
    :return: (int) d(h)
    """

    if type(h) is not int or h < 1:
        raise DomainError('Divisor count needs a positive integer, got {!r}'.format(h))
    return int(sympy.divisor_count(h))


def divisor_series(order):
    """ sum_k d(k) v^(2k), as a series in v.

    :param order: (int) truncation order
    :return: (Series) coefficients indexed by the power of v
    """

    _check_order(order)
    coeffs = [0] * (order + 1)
    for k in range(1, order // 2 + 1):
        coeffs[2 * k] = divisor_count(k)
    return Series(coeffs)


def lambert_partial_sum(order):
    """ sum_{h <= order/2} v^(2h) / (1 - v^(2h)), as a series in v.

    Terms with 2h > order vanish at this order.

    :param order: (int) truncation order
    :return: (Series) partial Lambert sum
    """

    _check_order(order)
    total = Series.zero(order)
    for h in range(1, order // 2 + 1):
        term = Series.monomial(2 * h, order)
        total = total + term / (1 - term)
    return total


@functools.lru_cache(maxsize=None)
def height_numerator_series(order):
    """ S = -2v + 2(1 - v^2)/v * sum_h v^(2h)/(1 - v^(2h)), expanded in z.

    [z^(n+1)] S is the total height of the even height restricted paths of
    semilength n, i.e. the total height minus the single height one path.

    :param order: (int) truncation order, at least 1
    :return: (Series) S as a series in z
    """

    _check_order(order, 1)
    start = time.time()

    v = Series.variable(order)
    lambert = divisor_series(order + 1).shift(-1)
    s_of_v = ((1 - v * v) * lambert).scale(2) - v.scale(2)
    s = s_of_v.compose(v_series(order))

    common_utils.log('Height numerator at order {} took {:.2f} seconds'.format(order, time.time() - start))
    return s


# ########## #
# TRINOMIALS #
# ########## #

@dataclass(frozen=True)
class TrinomialRow:
    """ Row n of the trinomial triangle, T(n, k) = [v^k] (1 + v + v^2)^n. """

    n: int
    values: Tuple[int, ...]

    def value(self, k):
        if 0 <= k <= 2 * self.n:
            return self.values[k]
        return 0


def _trinomial_values(n):
    values = [1]
    for k in range(1, 2 * n + 1):
        prev2 = values[k - 2] if k >= 2 else 0
        values.append(((n - k + 1) * values[k - 1] + (2 * n - k + 2) * prev2) // k)
    return tuple(values)


@functools.lru_cache(maxsize=None)
def trinomial_row(n):
    """ Row n of the trinomial triangle.

    Built in place with k T(n,k) = (n-k+1) T(n,k-1) + (2n-k+2) T(n,k-2).

    :param n: (int) row index, n >= 0
    :return: (TrinomialRow)
    """

    if type(n) is not int or n < 0:
        raise DomainError('Trinomial row index must be a non negative integer, got {!r}'.format(n))

    row = TrinomialRow(n, _trinomial_values(n))

    if constants.DO_SANITY_CHECKS and n >= 1:
        # previous row rebuilt directly, no recursion through the cache
        prev = TrinomialRow(n - 1, _trinomial_values(n - 1))
        for k in range(2 * n + 1):
            if row.value(k) != prev.value(k) + prev.value(k - 1) + prev.value(k - 2):
                raise ConsistencyError('Trinomial row {} breaks the row recurrence at {}'.format(n, k))

    return row


def trinomial(n, k):
    """ T(n, k), zero outside 0 <= k <= 2n. """
    return trinomial_row(n).value(k)


def motzkin_number(n):
    """ M_n = T(n, n) - T(n, n-2), exact for any n.

    :param n: (int) n >= 0
    :return: (int) Motzkin number
    """

    row = trinomial_row(n)
    return row.value(n) - row.value(n - 2)


def height_coeff_formula(n):
    """ [z^(n+1)] of (1 - v^2)/v * sum_h v^(2h)/(1 - v^(2h)).

    sum_h d(h) [T(n, n+2-2h) - 2 T(n, n-2h) + T(n, n-2-2h)]

    :param n: (int) n >= 1
    :return: (int) coefficient
    """

    if type(n) is not int or n < 1:
        raise DomainError('Height coefficient formula needs n >= 1, got {!r}'.format(n))

    row = trinomial_row(n)
    total = 0
    for h in range(1, (n + 2) // 2 + 1):
        total += divisor_count(h) * (
            row.value(n + 2 - 2 * h) - 2 * row.value(n - 2 * h) + row.value(n - 2 - 2 * h)
        )
    return total


def height_numerator_coeff(n):
    """ [z^(n+1)] S through the trinomial formula, for any n >= 1. """
    return 2 * height_coeff_formula(n) - 2 * motzkin_number(n)


# ############## #
# AVERAGE HEIGHT #
# ############## #

@dataclass(frozen=True)
class HeightReport:
    """ Average height of the restricted paths of semilength n.

    The exact average divides the total height of the even height paths by
    the number M_n of restricted paths of semilength n. The single height
    one path adds 1 to the total and is left out. asymptotic_average is an
    approximation, everything else is exact.
    """

    n: int
    exact_total_even_height: int
    normalizer: int
    exact_average: Fraction
    asymptotic_average: mpmath.mpf
    method: str
    oracle_checked: bool

    @property
    def ratio(self):
        with mpmath.workdps(constants.MP_DPS):
            return common_utils.to_mpf(self.exact_average) / self.asymptotic_average


def avg_height_exact(n, order=None, budget=None):
    """ Exact average height of restricted paths of semilength n.

    The total comes from the height numerator series when n + 1 fits the
    order, from the trinomial formula otherwise. Within the exhaustive
    budget it is also checked against enumeration.

    :param n: (int) semilength, n >= 1
    :param order: (int) largest series order to use, None for the configured one
    :param budget: (int) exhaustive budget, None for the configured one
    :return: (HeightReport)
    """

    if type(n) is not int or n < 1:
        raise DomainError('Average height needs n >= 1, got {!r}'.format(n))
    order = common_utils.resolve_order(order)
    budget = common_utils.resolve_budget(budget)

    if n + 1 <= order:
        total = height_numerator_series(n + 1).coeff(n + 1)
        method = 'series'
    else:
        total = Fraction(height_numerator_coeff(n))
        method = 'formula'

    if total.denominator != 1:
        raise ConsistencyError('Height numerator coefficient {} is not an integer'.format(total))
    total = total.numerator

    oracle_checked = n <= budget
    if oracle_checked and total != path_utils.total_even_height(n, budget):
        raise ConsistencyError('Height numerator disagrees with enumeration at n = {}'.format(n))

    normalizer = motzkin_number(n)
    return HeightReport(
        n=n,
        exact_total_even_height=total,
        normalizer=normalizer,
        exact_average=Fraction(total, normalizer),
        asymptotic_average=asymptotic_utils.avg_height_asym(n),
        method=method,
        oracle_checked=oracle_checked
    )


# ###### #
# LEAVES #
# ###### #

def leaves_system(order):
    """ Bivariate fixed point of F = zG/(1-G), G = zu + zF/(1-F); u marks leaves.

    Each application costs a bivariate division, keep the order moderate.

    :param order: (int) truncation order
    :return: (BivarSeries, BivarSeries) F(z, u) and G(z, u)
    """

    _check_order(order)

    def update(fg):
        f, g = fg
        zu = BivarSeries.marked_variable(f.order)
        return g.shift(1) / (1 - g), zu + f.shift(1) / (1 - f)

    start = time.time()
    f, g = solve_fixed_point(update, order, (BivarSeries.zero(0), BivarSeries.zero(0)))
    common_utils.log('Leaves system at order {} took {:.2f} seconds'.format(order, time.time() - start))
    return f, g


def leaves_closed_form(order, check=None):
    """ F(z, u) = (1 - zu - z^2 + z^2 u - sqrt(D)) / (2 (1 - zu + z)) where

    D = 1 - 2zu - 2z^2 - 2z^2 u + z^2 u^2 - 2z^3 u + 2z^3 u^2 + z^4 - 2z^4 u + z^4 u^2.

    :param order: (int) truncation order
    :param check: (bool) compare with leaves_system; None checks up to
        constants.LEAVES_SYSTEM_CHECK_ORDER
    :return: (BivarSeries) F(z, u)
    """

    _check_order(order)
    if check is None:
        check = order <= constants.LEAVES_SYSTEM_CHECK_ORDER

    radicand = BivarSeries(
        [[1], [0, -2], [-2, -2, 1], [0, -2, 2], [1, -2, 1]][:order + 1], order
    )
    numerator = BivarSeries([[1], [0, -1], [-1, 1]][:order + 1], order) - radicand.sqrt()
    denominator = BivarSeries([[2], [2, -2]][:order + 1], order)
    f = numerator / denominator

    if check and f != leaves_system(order)[0]:
        raise ConsistencyError('Closed form F(z, u) differs from the system at order {}'.format(order))

    return f


@functools.lru_cache(maxsize=None)
def leaves_total_gf(order):
    """ All restricted trees by nodes (z) and leaves (u).

    z/(1-zu) * 1/(1 - F/(1-zu)) + zu - z, the last two terms fixing the
    single node tree, which is a leaf.

    :param order: (int) truncation order
    :return: (BivarSeries) total leaf generating function
    """

    _check_order(order)
    start = time.time()

    f = leaves_closed_form(order)
    z = BivarSeries.variable(order)
    zu = BivarSeries.marked_variable(order)

    one_minus_zu = 1 - zu
    total = (z / one_minus_zu) / (1 - f / one_minus_zu) + zu - z

    common_utils.log('Leaves total at order {} took {:.2f} seconds'.format(order, time.time() - start))
    return total


def leaves_r_series(order):
    """ R(v) = v(1+v)(1-v+2v^2-v^3) / ((1-v)(1+v+v^2)) expanded in z.

    :param order: (int) truncation order
    :return: (Series) total number of leaves by number of nodes
    """

    _check_order(order)
    v = Series.variable(order)
    r_of_v = v * (1 + v) * (1 - v + 2 * v * v - v ** 3) / ((1 - v) * (1 + v + v * v))
    return r_of_v.compose(v_series(order))


def leaves_numerator(order, route=None):
    """ Total number of leaves of restricted trees, by number of nodes.

    :param order: (int) truncation order, at least 1
    :param route: (str) 'derivative' differentiates the total leaf
        generating function at u = 1, 'r' expands R(v); None picks the
        derivative up to constants.MAX_BIVARIATE_ORDER
    :return: (Series) leaves numerator
    """

    _check_order(order, 1)
    if route is None:
        route = 'derivative' if order <= constants.MAX_BIVARIATE_ORDER else 'r'

    if route == 'derivative':
        return leaves_total_gf(order).derivative_at(1)
    if route == 'r':
        return leaves_r_series(order)
    raise DomainError('Unknown leaves route {!r}'.format(route))


def leaves_coeff_formula(n):
    """ [z^(n+1)] R as trinomial coefficients of row n - 1.

    T(n-1,n) + T(n-1,n-1) + T(n-1,n-2) + 2 T(n-1,n-3) - T(n-1,n-5), and 1 for n = 0.

    :param n: (int) semilength, n >= 0
    :return: (int) total number of leaves over restricted trees with n + 1 nodes
    """

    if type(n) is not int or n < 0:
        raise DomainError('Leaves formula needs n >= 0, got {!r}'.format(n))
    if n == 0:
        return 1

    row = trinomial_row(n - 1)
    return (
        row.value(n) + row.value(n - 1) + row.value(n - 2) +
        2 * row.value(n - 3) - row.value(n - 5)
    )


def leaf_distribution(n, order=None):
    """ Number of restricted trees with n + 1 nodes by number of leaves.

    :param n: (int) semilength
    :param order: (int) order of the total leaf series, at least n + 1
    :return: (dict) leaves -> count
    """

    if type(n) is not int or n < 0:
        raise DomainError('Semilength must be a non negative integer, got {!r}'.format(n))
    if order is None:
        order = n + 1
    if order < n + 1:
        raise DomainError('Order {} too small for semilength {}'.format(order, n))

    row = leaves_total_gf(order).coeff(n + 1)
    out = {}
    for leaves, count in enumerate(row):
        if count:
            if count.denominator != 1:
                raise ConsistencyError('Non integral leaf count {} at n = {}'.format(count, n))
            out[leaves] = count.numerator
    return out


@dataclass(frozen=True)
class LeafReport:
    """ Average number of leaves of restricted trees with node_count = n + 1 nodes.

    asymptotic_average is (4/9) node_count; everything else is exact.
    """

    semilength: int
    node_count: int
    exact_total_leaves: int
    normalizer: int
    exact_average: Fraction
    asymptotic_average: mpmath.mpf
    method: str
    oracle_checked: bool
    distribution: Optional[dict] = None

    @property
    def ratio(self):
        with mpmath.workdps(constants.MP_DPS):
            return common_utils.to_mpf(self.exact_average) / self.asymptotic_average


def avg_leaves_exact(n, order=None, budget=None):
    """ Exact average number of leaves of restricted trees with n + 1 nodes.

    :param n: (int) semilength, n >= 0
    :param order: (int) largest series order to use, None for the configured one
    :param budget: (int) exhaustive budget, None for the configured one
    :return: (LeafReport)
    """

    if type(n) is not int or n < 0:
        raise DomainError('Semilength must be a non negative integer, got {!r}'.format(n))
    order = common_utils.resolve_order(order)
    budget = common_utils.resolve_budget(budget)

    if n + 1 <= order:
        total = leaves_r_series(n + 1).coeff(n + 1)
        method = 'series'
    else:
        total = Fraction(leaves_coeff_formula(n))
        method = 'formula'

    if total.denominator != 1:
        raise ConsistencyError('Leaves numerator coefficient {} is not an integer'.format(total))
    total = total.numerator

    oracle_checked = n <= budget
    distribution = None
    if oracle_checked:
        if total != path_utils.total_leaves(n, budget):
            raise ConsistencyError('Leaves numerator disagrees with enumeration at n = {}'.format(n))
        distribution = leaf_distribution(n)
        if distribution != path_utils.leaf_histogram(n, budget):
            raise ConsistencyError('Leaf distribution disagrees with enumeration at n = {}'.format(n))

    normalizer = motzkin_number(n)
    return LeafReport(
        semilength=n,
        node_count=n + 1,
        exact_total_leaves=total,
        normalizer=normalizer,
        exact_average=Fraction(total, normalizer),
        asymptotic_average=asymptotic_utils.avg_leaves_asym(n + 1),
        method=method,
        oracle_checked=oracle_checked,
        distribution=distribution
    )
