import json

from fractions import Fraction

import pytest

from retakh import constants
from retakh import common_utils
from retakh.errors import ConfigError


def _write_config(tmp_path, cfg):
    cfg_path = tmp_path / 'scan.json'
    cfg_path.write_text(json.dumps(cfg))
    return str(cfg_path)


@pytest.fixture
def scan_config():
    return {
        'comparisons': ['motzkin', 'avg_leaves'],
        'ladder': [25, 50, 100],
        'save_dir': 'results'
    }


# ############# #
# CONFIGURATION #
# ############# #

def test_read_config(tmp_path, scan_config):
    cfg = common_utils.read_config(_write_config(tmp_path, scan_config))
    assert cfg['comparisons'] == ['motzkin', 'avg_leaves']
    assert cfg['plot'] is False


def test_missing_config(tmp_path):
    with pytest.raises(ConfigError):
        common_utils.read_config(str(tmp_path / 'nope.json'))


@pytest.mark.parametrize('field, value', [
    ('comparisons', ['motzkin', 'depth']),
    ('ladder', [50, 25]),
    ('ladder', [0, 10]),
    ('ladder', [10, 20.5]),
    ('save_dir', 3),
    ('plot', 'yes')
])
def test_invalid_config(tmp_path, scan_config, field, value):
    scan_config[field] = value
    with pytest.raises(ConfigError):
        common_utils.read_config(_write_config(tmp_path, scan_config))


def test_missing_field(tmp_path, scan_config):
    del scan_config['ladder']
    with pytest.raises(ValueError):
        common_utils.read_config(_write_config(tmp_path, scan_config))


def test_exp_name(scan_config):
    assert common_utils.get_exp_name(scan_config['comparisons'], scan_config['ladder']) == \
        'motzkin__avg_leaves__25_100'


# ######## #
# SETTINGS #
# ######## #

def test_defaults():
    assert common_utils.resolve_budget() == constants.DEFAULT_BUDGET
    assert common_utils.resolve_order() == constants.DEFAULT_ORDER


def test_environment_and_flag_precedence(monkeypatch):
    monkeypatch.setenv(constants.BUDGET_ENV_VAR, '9')
    monkeypatch.setenv(constants.ORDER_ENV_VAR, ' 30 ')
    assert common_utils.resolve_budget() == 9
    assert common_utils.resolve_budget(4) == 4
    assert common_utils.resolve_order() == 30


def test_invalid_settings(monkeypatch):
    with pytest.raises(ConfigError):
        common_utils.resolve_order(-1)
    monkeypatch.setenv(constants.BUDGET_ENV_VAR, 'lots')
    with pytest.raises(ConfigError):
        common_utils.resolve_budget()


# ######### #
# RENDERING #
# ######### #

def test_format_exact():
    assert common_utils.format_exact(Fraction(50, 21)) == '50/21'
    assert common_utils.format_exact(Fraction(4, 2)) == '2'
    assert common_utils.format_exact(7) == '7'


def test_format_float():
    assert common_utils.format_float(Fraction(1, 3)) == '0.333333333333'
    assert common_utils.format_float(Fraction(2, 3)) == '0.666666666667'
    assert common_utils.format_float(4) == '4.0'


def test_log(monkeypatch, capsys):
    common_utils.log('hidden')
    monkeypatch.setattr(constants, 'VERBOSE', True)
    common_utils.log('shown')
    captured = capsys.readouterr()
    assert captured.out == ''
    assert captured.err == 'shown\n'
