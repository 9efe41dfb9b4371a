"""
Leading order asymptotic formulas for restricted paths.

Everything here is real valued and evaluated with mpmath at
constants.MP_DPS decimal places. Quantities of size 3^n are evaluated in
log space, so n in the thousands is fine.
"""
from fractions import Fraction
from dataclasses import dataclass

import mpmath

from retakh import constants
from retakh import common_utils
from retakh.errors import DomainError


def _check_positive(n, what='n'):
    if type(n) is not int or n < 1:
        raise DomainError('{} must be a positive integer, got {!r}'.format(what, n))


def motzkin_asym(n):
    """ [z^n] zM(z) ~ 3^(n+1/2) / (2 sqrt(pi) n^(3/2)).

    :param n: (int) index, n >= 1
    :return: (mpf) approximation of M_(n-1)
    """

    _check_positive(n)
    with mpmath.workdps(constants.MP_DPS):
        n = mpmath.mpf(n)
        half = mpmath.mpf(1) / 2
        log_value = (
            (n + half) * mpmath.log(3) - mpmath.log(2) -
            half * mpmath.log(mpmath.pi) - 3 * half * mpmath.log(n)
        )
        return mpmath.exp(log_value)


def motzkin_path_height_ref(n):
    """ Average height of Motzkin paths of length n, sqrt(pi n / 3).

    Reference value only, nothing in the package enumerates Motzkin paths.
    """

    _check_positive(n)
    with mpmath.workdps(constants.MP_DPS):
        return mpmath.sqrt(mpmath.pi * n / 3)


def avg_height_asym(n):
    """ Average height of restricted paths of semilength n, 2 sqrt(pi n / 3). """
    _check_positive(n)
    with mpmath.workdps(constants.MP_DPS):
        return 2 * motzkin_path_height_ref(n)


def avg_leaves_asym(node_count):
    """ Average number of leaves of restricted trees with node_count nodes, 4/9 of the size. """
    _check_positive(node_count, 'node_count')
    with mpmath.workdps(constants.MP_DPS):
        return mpmath.mpf(4) * node_count / 9


def unrestricted_leaves_asym(node_count):
    """ Same for all plane trees: half of the nodes are leaves. """
    _check_positive(node_count, 'node_count')
    with mpmath.workdps(constants.MP_DPS):
        return mpmath.mpf(node_count) / 2


def height_numerator_asym_coeff(n):
    """ [z^n] of the height numerator, which behaves like -log(1 - 3z): 3^n / n. """

    _check_positive(n)
    with mpmath.workdps(constants.MP_DPS):
        return mpmath.exp(n * mpmath.log(3) - mpmath.log(n))


@dataclass(frozen=True)
class AsymptoticComparison:
    """ An exact value next to its asymptotic approximation.

    The ratio is derived from the two stored fields on every access.
    """

    kind: str
    n: int
    exact: Fraction
    asymptotic: mpmath.mpf

    @property
    def ratio(self):
        with mpmath.workdps(constants.MP_DPS):
            return common_utils.to_mpf(self.exact) / self.asymptotic

    @property
    def abs_error(self):
        with mpmath.workdps(constants.MP_DPS):
            return abs(self.ratio - 1)

    def to_row(self):
        return {
            'kind': self.kind,
            'n': self.n,
            'exact': common_utils.format_float(self.exact),
            'asymptotic': common_utils.format_float(self.asymptotic),
            'ratio': common_utils.format_float(self.ratio),
            'abs_error': common_utils.format_float(self.abs_error)
        }
