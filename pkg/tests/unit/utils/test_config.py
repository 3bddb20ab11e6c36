"""Tests for the configuration constants."""

import pytest

from src.utils import config


@pytest.mark.unit
def test_exit_codes():
    """Test the three CLI exit codes."""
    assert (config.EXIT_SUCCESS, config.EXIT_AUDIT_FAILURE, config.EXIT_USAGE_ERROR) == (0, 1, 2)


@pytest.mark.unit
def test_defaults_within_validator_bounds():
    """Test that every default passes its own validator bound."""
    assert 1 <= config.DEFAULT_NMAX <= config.MAX_NMAX
    assert 1 <= config.DEFAULT_TRUNCATION <= config.MAX_TRUNCATION
    assert 1 <= config.DEFAULT_SAMPLES <= config.MAX_SAMPLES
    assert config.CANONICAL_CHECK_TRUNCATION <= config.MAX_TRUNCATION


@pytest.mark.unit
def test_default_model_and_format():
    """Test that the defaults are among the accepted choices."""
    assert config.DEFAULT_MODEL in config.MODEL_NAMES
    assert config.DEFAULT_OUTPUT_FORMAT in config.OUTPUT_FORMATS
    assert config.COCYCLE_TABLE_DIMENSIONS == (1, 2, 3)
