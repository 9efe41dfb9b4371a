import pytest

from hypothesis import HealthCheck, settings

from retakh import constants
from retakh.path_utils import DyckPath

# The autouse fixture below only resets module state, it is safe to share
# between generated examples.
settings.register_profile(
    'retakh',
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture]
)
settings.load_profile('retakh')


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """ Run every test with the built-in budget and order and quiet logging. """
    monkeypatch.delenv(constants.BUDGET_ENV_VAR, raising=False)
    monkeypatch.delenv(constants.ORDER_ENV_VAR, raising=False)
    monkeypatch.setattr(constants, 'VERBOSE', False)
    monkeypatch.setattr(constants, 'DO_SANITY_CHECKS', False)


@pytest.fixture
def figure_path():
    return DyckPath.from_string('UDUUUUDUUUDDDDDDUDUD')


@pytest.fixture
def motzkin_numbers():
    """ M_0..M_14, the number of restricted paths by semilength. """
    return [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634]
