"""
This module contains the named identity checks run by `verify`.

Every check takes the parameter dictionary of a verification level (see
constants.verify_levels) and returns (passed, detail). A library error
raised inside a check counts as a failure of that check.
"""
import time

from dataclasses import dataclass

import tqdm

from retakh import constants
from retakh import common_utils
from retakh import gf_utils
from retakh import path_utils
from retakh import convergence_utils
from retakh.series_utils import Series
from retakh.errors import DomainError, RetakhError


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def to_row(self):
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail}


def _mismatch(what, n, got, expected):
    return False, '{} at n = {}: got {}, expected {}'.format(what, n, got, expected)


def _oracle_max(params, cap=12):
    return min(params['max_semilength'], cap)


# ####### #
# MOTZKIN #
# ####### #

def check_motzkin_enumeration(params):
    top = params['max_semilength']
    m = gf_utils.motzkin_series(max(params['order'], top))
    total = gf_utils.total_gf(top + 1)

    for n in range(top + 1):
        brute = path_utils.count_restricted(n, budget=top)
        if brute != m.coeff(n):
            return _mismatch('Brute force count vs M_n', n, brute, m.coeff(n))
        if brute != total.coeff(n + 1):
            return _mismatch('Brute force count vs total generating function', n, brute, total.coeff(n + 1))

    return True, 'restricted paths counted by M_n for n <= {}'.format(top)


def check_motzkin_closed_form(params):
    order = params['order']
    if gf_utils.motzkin_closed_form(order) != gf_utils.motzkin_series(order):
        return False, 'square root route differs from the fixed point at order {}'.format(order)

    z = Series.variable(order)
    t = 1 - z - 2 * gf_utils.motzkin_series(order).shift(2)
    if t * t != Series([1, -2, -3], order):
        return False, '(1 - z - 2z^2 M)^2 differs from 1 - 2z - 3z^2 at order {}'.format(order)

    return True, 'closed form and squared radical agree at order {}'.format(order)


def check_triangle_trees(params):
    order = params['order']
    f, g = gf_utils.solve_fg(order)
    if f != gf_utils.motzkin_series(order).shift(2):
        return False, 'F differs from z^2 M(z) at order {}'.format(order)
    if order >= 1 and g.coeff(1) != 1:
        return _mismatch('[z]G', 1, g.coeff(1), 1)
    return True, 'F = z^2 M(z) at order {}'.format(order)


def check_total_gf(params):
    gf_utils.total_gf(params['order'])
    return True, 'total generating function equals zM(z) at order {}'.format(params['order'])


def check_v_substitution(params):
    order = params['order']
    v = gf_utils.v_series(order)
    m = gf_utils.motzkin_series(order)

    if v != m.shift(1):
        return False, 'v differs from zM(z) at order {}'.format(order)
    if (1 + v + v * v) != m:
        return False, '1 + v + v^2 differs from M(z) at order {}'.format(order)

    w = Series.variable(order)
    if (w / (1 + w + w * w)).compose(v) != Series.variable(order):
        return False, 'v / (1 + v + v^2) does not give back z at order {}'.format(order)

    return True, 'v = zM(z), M = 1 + v + v^2 and z = v/(1+v+v^2) at order {}'.format(order)


# ################# #
# HEIGHT RESTRICTED #
# ################# #

def check_g_k_base(params):
    order = params['g_k_order']
    z = Series.variable(order)
    if gf_utils.g_k(1, order) != z:
        return False, 'G_1 differs from z at order {}'.format(order)
    if gf_utils.f_k(1, order) != z * z / (1 - z):
        return False, 'F_1 differs from z^2/(1-z) at order {}'.format(order)
    return True, 'G_1 = z and F_1 = z^2/(1-z) at order {}'.format(order)


def check_g_k_recurrence(params):
    order = params['g_k_order']
    z = Series.variable(order)

    current = gf_utils.g_k(1, order)
    for k in range(1, params['g_k_max'] + 1):
        following = gf_utils.g_k(k + 1, order)
        if following != z / (1 - z * current / (1 - current)):
            return False, 'G_{} does not follow from G_{} at order {}'.format(k + 1, k, order)
        current = following

    return True, 'G_(k+1) = z / (1 - z G_k / (1 - G_k)) for k <= {} at order {}'.format(params['g_k_max'], order)


def check_f_k(params):
    order = params['g_k_order']
    z = Series.variable(order)

    for k in range(1, params['g_k_max'] + 1):
        g = gf_utils.g_k(k, order)
        if gf_utils.f_k(k, order) != z * g / (1 - g):
            return False, 'F_{} differs from z G_{} / (1 - G_{}) at order {}'.format(k, k, k, order)

    return True, 'F_k = z G_k / (1 - G_k) for k <= {} at order {}'.format(params['g_k_max'], order)


def check_height_distribution(params):
    top = _oracle_max(params)
    order = top + 1
    gfs = [gf_utils.height_le_gf(h, order) for h in range(top + 1)]

    for n in range(top + 1):
        hist = path_utils.height_histogram(n, budget=params['max_semilength'])
        if sum(hist.values()) != gf_utils.motzkin_number(n):
            return _mismatch('Histogram total', n, sum(hist.values()), gf_utils.motzkin_number(n))
        if any(height >= 3 and height % 2 for height in hist):
            return False, 'odd height above one at n = {}: {}'.format(n, hist)

        low = gfs[0].coeff(n + 1)
        if low != hist.get(0, 0) + hist.get(1, 0):
            return _mismatch('Paths of height at most 1', n, low, hist.get(0, 0) + hist.get(1, 0))

        for h in range(1, top + 1):
            exact = gfs[h].coeff(n + 1) - gfs[h - 1].coeff(n + 1)
            if exact != hist.get(2 * h, 0):
                return _mismatch('Paths of height {}'.format(2 * h), n, exact, hist.get(2 * h, 0))

    if gf_utils.height_le_gf(order, order) != gf_utils.v_series(order):
        return False, 'height bound beyond the order differs from v at order {}'.format(order)

    return True, 'exact height counts match enumeration for n <= {}'.format(top)


def check_height_numerator(params):
    top = _oracle_max(params)
    budget = params['max_semilength']
    s = gf_utils.height_numerator_series(top + 1)
    gfs = [gf_utils.height_le_gf(h, top + 1) for h in range(top + 1)]

    for n in range(1, top + 1):
        even = path_utils.total_even_height(n, budget)
        if s.coeff(n + 1) != even:
            return _mismatch('[z^(n+1)]S vs total even height', n, s.coeff(n + 1), even)
        if path_utils.total_height(n, budget) - 1 != even:
            return _mismatch('Total height minus one vs total even height', n,
                             path_utils.total_height(n, budget) - 1, even)

        telescoped = sum(
            2 * h * (gfs[h].coeff(n + 1) - gfs[h - 1].coeff(n + 1)) for h in range(1, top + 1)
        )
        if telescoped != s.coeff(n + 1):
            return _mismatch('Telescoped height sum', n, telescoped, s.coeff(n + 1))

    return True, 'height numerator matches enumeration for 1 <= n <= {}'.format(top)


def check_trinomial_formula(params):
    top = params['formula_max']
    s = gf_utils.height_numerator_series(top + 1)
    m = gf_utils.motzkin_series(top)

    for n in range(1, top + 1):
        value = 2 * gf_utils.height_coeff_formula(n) - 2 * m.coeff(n)
        if value != s.coeff(n + 1):
            return _mismatch('Trinomial extraction of [z^(n+1)]S', n, value, s.coeff(n + 1))

    return True, '2 formula(n) - 2 M_n = [z^(n+1)]S for n <= {}'.format(top)


def check_trinomial_rows(params):
    m = gf_utils.motzkin_series(params['order'])

    for n in range(21):
        row = gf_utils.trinomial_row(n)
        if any(row.value(k) != row.value(2 * n - k) for k in range(2 * n + 1)):
            return False, 'trinomial row {} is not symmetric'.format(n)
        if sum(row.values) != 3 ** n:
            return _mismatch('Trinomial row sum', n, sum(row.values), 3 ** n)
        if n >= 1:
            prev = gf_utils.trinomial_row(n - 1)
            for k in range(2 * n + 1):
                if row.value(k) != prev.value(k) + prev.value(k - 1) + prev.value(k - 2):
                    return False, 'trinomial row {} breaks the row recurrence at k = {}'.format(n, k)
        direct = Series([1, 1, 1], 2 * n + 2).truncate(2 * n) ** n
        if list(direct.coeffs) != list(row.values):
            return False, 'trinomial row {} differs from (1 + v + v^2)^{}'.format(n, n)

    for n in range(params['order'] + 1):
        if gf_utils.motzkin_number(n) != m.coeff(n):
            return _mismatch('T(n,n) - T(n,n-2)', n, gf_utils.motzkin_number(n), m.coeff(n))

    return True, 'trinomial rows n <= 20 and M_n = T(n,n) - T(n,n-2) for n <= {}'.format(params['order'])


def check_divisor_lambert(params):
    order = params['order']
    if gf_utils.lambert_partial_sum(order) != gf_utils.divisor_series(order):
        return False, 'Lambert partial sums differ from sum d(k) v^(2k) at order {}'.format(order)
    return True, 'Lambert sums equal sum d(k) v^(2k) at order {}'.format(order)


# ###### #
# LEAVES #
# ###### #

def check_leaves_system(params):
    order = params['system_order']
    f_system, g_system = gf_utils.leaves_system(order)
    f_closed = gf_utils.leaves_closed_form(order, check=False)

    if f_closed != f_system:
        return False, 'closed form F(z, u) differs from the system at order {}'.format(order)
    if f_system.evaluate(1) != gf_utils.solve_fg(order)[0]:
        return False, 'F(z, 1) differs from F(z) at order {}'.format(order)
    if f_closed.evaluate(0) != Series.zero(order):
        return False, 'F(z, 0) does not vanish at order {}'.format(order)
    if g_system.coeff(0):
        return False, 'G(z, u) has a constant term'

    return True, 'leaf system and closed form agree at order {}'.format(order)


def check_leaves_total(params):
    order = params['leaves_order']
    total = gf_utils.leaves_total_gf(order)

    if total.evaluate(1) != gf_utils.motzkin_series(order).shift(1):
        return False, 'total leaf generating function at u = 1 differs from zM(z) at order {}'.format(order)

    for n in range(_oracle_max(params) + 1):
        dist = gf_utils.leaf_distribution(n, order)
        hist = path_utils.leaf_histogram(n, params['max_semilength'])
        if dist != hist:
            return _mismatch('Leaf distribution', n, dist, hist)

    return True, 'leaf distributions match enumeration for n <= {}'.format(_oracle_max(params))


def check_leaves_routes(params):
    order = params['leaves_order']
    derivative = gf_utils.leaves_numerator(order, route='derivative')
    r = gf_utils.leaves_r_series(order)

    if derivative != r:
        return False, 'derivative route differs from R(v) at order {}'.format(order)

    for n in range(_oracle_max(params) + 1):
        brute = path_utils.total_leaves(n, params['max_semilength'])
        if derivative.coeff(n + 1) != brute:
            return _mismatch('Total leaves', n, derivative.coeff(n + 1), brute)

    for n in range(order):
        if gf_utils.leaves_coeff_formula(n) != r.coeff(n + 1):
            return _mismatch('Trinomial leaves formula', n, gf_utils.leaves_coeff_formula(n), r.coeff(n + 1))

    return True, 'derivative, R(v), trinomial formula and enumeration agree at order {}'.format(order)


# ######### #
# BIJECTION #
# ######### #

def check_bijection(params):
    top = min(params['max_semilength'], 8)

    for n in range(top + 1):
        for path in path_utils.enumerate_restricted(n):
            tree = path_utils.path_to_tree(path)
            if path_utils.tree_to_path(tree) != path:
                return False, 'bijection does not round trip on {}'.format(path)
            if tree.node_count != n + 1 or tree.height != path.height():
                return False, 'bijection changes size or height of {}'.format(path)
            if tree.leaf_count != path_utils.stats(path).leaf_count:
                return False, 'bijection changes the leaves of {}'.format(path)
            if path_utils.PlaneTree.from_parentheses(tree.to_parentheses()) != tree:
                return False, 'parentheses do not round trip on {}'.format(path)

    for n in range(1, params['max_semilength'] + 1):
        budget = params['max_semilength']
        diff = path_utils.total_height(n, budget) - path_utils.total_even_height(n, budget)
        if diff != 1:
            return _mismatch('Paths of height one', n, diff, 1)

    return True, 'bijection preserves size, height and leaves for n <= {}'.format(top)


# ########### #
# ASYMPTOTICS #
# ########### #

def _make_scan_check(kind):

    def check(params):
        n, tol = constants.tolerances[kind]
        error = float(convergence_utils.compare(kind, n).abs_error)
        if not error < tol:
            return False, '|ratio - 1| = {:.4f} at n = {} exceeds {}'.format(error, n, tol)

        scan = convergence_utils.convergence_scan(kind)
        violations = convergence_utils.ladder_violations(scan['abs_error'].tolist())
        if violations > constants.allowed_ladder_violations[kind]:
            return False, '|ratio - 1| grows on {} rungs of the ladder'.format(violations)

        if kind == constants.comparison_motzkin:
            early = float(convergence_utils.compare(kind, 50).abs_error)
            if not error < early:
                return False, '|ratio - 1| does not improve from n = 50 to n = {}'.format(n)

        return True, '|ratio - 1| = {:.4f} at n = {} (tolerance {})'.format(error, n, tol)

    return check


checks = [
    ('motzkin_enumeration', check_motzkin_enumeration),
    ('motzkin_closed_form', check_motzkin_closed_form),
    ('triangle_trees', check_triangle_trees),
    ('total_gf', check_total_gf),
    ('v_substitution', check_v_substitution),
    ('g_k_base', check_g_k_base),
    ('g_k_recurrence', check_g_k_recurrence),
    ('f_k', check_f_k),
    ('height_distribution', check_height_distribution),
    ('height_numerator', check_height_numerator),
    ('trinomial_formula', check_trinomial_formula),
    ('trinomial_rows', check_trinomial_rows),
    ('divisor_lambert', check_divisor_lambert),
    ('leaves_system', check_leaves_system),
    ('leaves_total', check_leaves_total),
    ('leaves_routes', check_leaves_routes),
    ('bijection', check_bijection)
]

scan_checks = [('asymptotic_' + kind, _make_scan_check(kind)) for kind in constants.possible_comparisons]


def run_checks(level='quick'):
    """ Run every check of a verification level.

    :param level: (str) one of constants.possible_verify_levels
    :return: (list) CheckResult per check, in a fixed order
    """

    if level not in constants.possible_verify_levels:
        raise DomainError('Unknown verification level {!r}'.format(level))
    params = constants.verify_levels[level]

    todo = checks + (scan_checks if params['scans'] else [])
    results = []
    for name, check in tqdm.tqdm(todo, desc='verify ' + level, disable=not constants.VERBOSE):
        start = time.time()
        try:
            passed, detail = check(params)
        except RetakhError as e:
            passed, detail = False, '{}: {}'.format(type(e).__name__, e)
        common_utils.log('Check {} took {:.2f} seconds'.format(name, time.time() - start))
        results.append(CheckResult(name, passed, detail))

    return results
