"""
This module pairs exact values with their asymptotic approximations and
scans the ratio along a ladder of sizes.
"""
import time

from fractions import Fraction

import tqdm
import numpy as np
import pandas as pd

from retakh import constants
from retakh import common_utils
from retakh import gf_utils
from retakh import asymptotic_utils
from retakh.asymptotic_utils import AsymptoticComparison
from retakh.errors import DomainError


def compare_motzkin(n):
    """ M_(n-1) against 3^(n+1/2) / (2 sqrt(pi) n^(3/2)).

    :param n: (int) n >= 1
    :return: (AsymptoticComparison)
    """

    return AsymptoticComparison(
        kind=constants.comparison_motzkin,
        n=n,
        exact=Fraction(gf_utils.motzkin_number(n - 1)),
        asymptotic=asymptotic_utils.motzkin_asym(n)
    )


def compare_avg_height(n, order=None, budget=None):
    """ Exact average height of semilength n paths against 2 sqrt(pi n / 3). """

    report = gf_utils.avg_height_exact(n, order=order, budget=budget)
    return AsymptoticComparison(
        kind=constants.comparison_avg_height,
        n=n,
        exact=report.exact_average,
        asymptotic=report.asymptotic_average
    )


def compare_avg_leaves(n, order=None, budget=None):
    """ Exact average leaf count of trees with n + 1 nodes against 4 (n + 1) / 9. """

    report = gf_utils.avg_leaves_exact(n, order=order, budget=budget)
    return AsymptoticComparison(
        kind=constants.comparison_avg_leaves,
        n=n,
        exact=report.exact_average,
        asymptotic=report.asymptotic_average
    )


def compare_height_numerator(n):
    """ [z^(n+1)] S against 3^(n+1) / (n+1). """

    return AsymptoticComparison(
        kind=constants.comparison_height_numerator,
        n=n,
        exact=Fraction(gf_utils.height_numerator_coeff(n)),
        asymptotic=asymptotic_utils.height_numerator_asym_coeff(n + 1)
    )


comparators = {
    constants.comparison_motzkin: compare_motzkin,
    constants.comparison_avg_height: compare_avg_height,
    constants.comparison_avg_leaves: compare_avg_leaves,
    constants.comparison_height_numerator: compare_height_numerator
}


def compare(kind, n):
    if kind not in comparators:
        raise DomainError('Unknown comparison {!r}'.format(kind))
    return comparators[kind](n)


def convergence_scan(kind, ladder=None):
    """ Compare exact and asymptotic values at every rung of a ladder.

    :param kind: (str) one of constants.possible_comparisons
    :param ladder: (list) increasing sizes, constants.ASYMPTOTIC_LADDER if None
    :return: (DataFrame) one row per rung: n, exact, asymptotic, ratio, abs_error
    """

    if ladder is None:
        ladder = constants.ASYMPTOTIC_LADDER

    start = time.time()
    rows = []
    for n in tqdm.tqdm(ladder, desc=kind, disable=not constants.VERBOSE):
        comparison = compare(kind, n)
        rows.append({
            'n': n,
            'exact': common_utils.format_float(comparison.exact),
            'asymptotic': common_utils.format_float(comparison.asymptotic),
            'ratio': float(comparison.ratio),
            'abs_error': float(comparison.abs_error)
        })

    common_utils.log('Scan of {} took {:.2f} seconds'.format(kind, time.time() - start))
    return pd.DataFrame(rows, columns=['n', 'exact', 'asymptotic', 'ratio', 'abs_error'])


def ladder_violations(errors, start=1):
    """ Number of rungs where |ratio - 1| grows, counting from rung start on.

    :param errors: (list) |ratio - 1| along the ladder
    :param start: (int) first rung taking part in the comparison
    :return: (int) number of increases
    """

    errors = np.asarray(errors, dtype=float)[start:]
    if len(errors) < 2:
        return 0
    return int(np.sum(np.diff(errors) > 0))
