from fractions import Fraction

import pytest
from pydantic import ValidationError

from core import constants
from core.constants import Settings


def test_settings_defaults():
    settings = Settings()
    assert settings.DESCENT_CAP_SLACK == 1
    assert settings.COMPARE_TRANSLATE_SLACK == 1
    assert settings.EXAMPLES_FIXTURE == 'fixtures/expected_examples.json'
    assert (settings.VERIFY_GENUS_MAX, settings.VERIFY_DEGREE_MAX) == (5, 3)
    assert constants.CESARO_TOLERANCE == Fraction(1, 50)


def test_settings_env(monkeypatch):
    monkeypatch.setenv('GRADESTAB_DESCENT_CAP_SLACK', '4')
    monkeypatch.setenv('GRADESTAB_LOG_LEVEL', 'DEBUG')
    settings = Settings()
    assert settings.DESCENT_CAP_SLACK == 4
    assert settings.LOG_LEVEL == 'DEBUG'


def test_settings_reject_negative_slack(monkeypatch):
    monkeypatch.setenv('GRADESTAB_DESCENT_CAP_SLACK', '-1')
    with pytest.raises(ValidationError):
        Settings()


def test_exit_codes_and_statuses():
    assert (constants.EXIT_OK, constants.EXIT_VERIFICATION, constants.EXIT_INPUT, constants.EXIT_INVARIANT) == (0, 1, 2, 3)
    assert (constants.STATUS_OK, constants.STATUS_FAILED, constants.STATUS_ERROR) == ('ok', 'failed', 'error')
    assert constants.INFINITY_TOKEN == 'inf'


def test_input_limits():
    settings = Settings()
    assert settings.MAX_EXPONENT == 100
    assert settings.FIXTURES_DIR == 'fixtures'
