"""
This module contains common utility functions: configuration handling,
rendering of exact and real values, and progress messages.
"""
import os
import sys
import json

from fractions import Fraction

import mpmath

from retakh import constants
from retakh.errors import ConfigError


def read_config(cfg_path):
    """ Read a scan configuration file and check validity.

    Expected fields:
    {
      "comparisons": "list of strings -- asymptotic comparisons to scan",
      "ladder": "list of integers -- semilengths at which to compare",
      "save_dir": "string -- directory where the summary is written",
      "plot": "bool -- optional, also save a convergence plot"
    }

    :param cfg_path: (str) path to the configuration file
    :return: (dict) configuration dictionary
    """

    if not os.path.isfile(cfg_path):
        raise ConfigError(
            'Provided configuration file does not exist: {}'.format(
                cfg_path
            )
        )

    with open(cfg_path, 'r', encoding='utf-8') as cfg_file:
        cfg = json.load(cfg_file)

    for field in ['comparisons', 'ladder', 'save_dir']:
        if field not in cfg:
            raise ConfigError('Missing configuration field {}'.format(field))

    for i in cfg['comparisons']:
        if i not in constants.possible_comparisons:
            raise ConfigError('Invalid comparison {}'.format(i))

    for i in cfg['ladder']:
        if type(i) is not int or i < 1:
            raise ConfigError('Ladder rungs must be positive integers {}'.format(i))

    if sorted(cfg['ladder']) != cfg['ladder']:
        raise ConfigError('Ladder rungs must be increasing {}'.format(cfg['ladder']))

    i = cfg['save_dir']
    if type(i) is not str:
        raise ConfigError('Save directory must be a string {}'.format(i))

    i = cfg.setdefault('plot', False)
    if type(i) is not bool:
        raise ConfigError('Plot flag must be a boolean {}'.format(i))

    return cfg


# ######## #
# SETTINGS #
# ######## #

def _resolve_int(value, env_var, default, what):
    """ Resolve an integer setting: explicit value, then environment, then default.

    :param value: (int) explicit value, None if not given
    :param env_var: (str) name of the overriding environment variable
    :param default: (int) fallback value
    :param what: (str) human readable name of the setting
    :return: (int) resolved value
    """

    if value is None:
        raw = os.environ.get(env_var, '').strip()
        if not raw:
            return default
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError('{} must be an integer, got {}={!r}'.format(what, env_var, raw))

    if value < 0:
        raise ConfigError('{} must be non negative, got {}'.format(what, value))

    return value


def resolve_budget(value=None):
    """ Exhaustive enumeration budget (largest semilength for the oracle).

    :param value: (int) explicit budget, None to use RETAKH_BUDGET or the default
    :return: (int) budget
    """
    return _resolve_int(value, constants.BUDGET_ENV_VAR, constants.DEFAULT_BUDGET, 'Budget')


def resolve_order(value=None):
    """ Default truncation order for series computations.

    :param value: (int) explicit order, None to use RETAKH_ORDER or the default
    :return: (int) order
    """
    return _resolve_int(value, constants.ORDER_ENV_VAR, constants.DEFAULT_ORDER, 'Order')


# ######### #
# RENDERING #
# ######### #

def format_exact(value):
    """ Render an exact value as 'p/q' (or 'p' for integers).

    :param value: (int or Fraction) exact value
    :return: (str) rendered value
    """
    return str(Fraction(value))


def to_mpf(value):
    """ Convert an exact or real value to an mpmath number.

    :param value: (int, Fraction, float or mpf) value to convert
    :return: (mpf) value at the working precision
    """

    with mpmath.workdps(constants.MP_DPS):
        if isinstance(value, Fraction):
            return mpmath.mpf(value.numerator) / value.denominator
        return mpmath.mpf(value)


def format_float(value):
    """ Render a real value with constants.FLOAT_DIGITS significant digits.

    :param value: (float, mpf or exact) value to render
    :return: (str) rendered value
    """
    return mpmath.nstr(to_mpf(value), constants.FLOAT_DIGITS)


# ####### #
# LOGGING #
# ####### #

def log(message):
    """ Print a progress message on stderr if constants.VERBOSE is set.

    :param message: (str) message to print
    """
    if constants.VERBOSE:
        print(message, file=sys.stderr)


def get_exp_name(comparisons, ladder):
    """ Unified scan name generator.

    :param comparisons: (list) identifiers of the scanned comparisons
    :param ladder: (list) semilengths of the ladder
    :return: (str) scan name
    """

    return '__'.join(comparisons) + '__' + str(ladder[0]) + '_' + str(ladder[-1])
