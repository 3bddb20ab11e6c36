"""Unit tests for InputValidator."""

from fractions import Fraction

import pytest

from src.core.exceptions import CyclicValidationError
from src.core.validator import InputValidator
from src.utils.config import MAX_NMAX


@pytest.mark.unit
class TestInputValidator:
    """Test suite for InputValidator."""

    def test_validate_int_valid(self):
        """Test validating integers with and without bounds."""
        assert InputValidator.validate_int("7", "n") == 7
        assert InputValidator.validate_int(" -2 ", "n") == -2
        assert InputValidator.validate_int("3", "n", 0, 3) == 3

    def test_validate_int_invalid_format(self):
        """Test validating non-integers."""
        with pytest.raises(CyclicValidationError, match="must be an integer"):
            InputValidator.validate_int("abc", "n")

        with pytest.raises(CyclicValidationError, match="must be an integer"):
            InputValidator.validate_int("1.5", "n")

    def test_validate_int_out_of_range(self):
        """Test validating integers outside their bounds."""
        with pytest.raises(CyclicValidationError, match="at least 1"):
            InputValidator.validate_nmax("0")

        with pytest.raises(CyclicValidationError, match=f"at most {MAX_NMAX}"):
            InputValidator.validate_nmax(str(MAX_NMAX + 1))

    def test_validate_named_options(self):
        """Test the wrappers used for the sampling options."""
        assert InputValidator.validate_nmax("4") == 4
        assert InputValidator.validate_samples("200") == 200
        assert InputValidator.validate_seed("-5") == -5
        assert InputValidator.validate_truncation("3") == 3

        with pytest.raises(CyclicValidationError, match="--samples"):
            InputValidator.validate_samples("0")

    @pytest.mark.parametrize("spec", ["finite:0", "finite:12", "rational", "pl"])
    def test_validate_model_valid(self, spec):
        """Test validating shipped models."""
        assert InputValidator.validate_model(spec) == spec

    @pytest.mark.parametrize("spec", ["finite", "finite:-1", "real", "rational:2", ""])
    def test_validate_model_invalid(self, spec):
        """Test validating unknown models."""
        with pytest.raises(CyclicValidationError, match="Unknown model"):
            InputValidator.validate_model(spec)

    def test_validate_fiber(self):
        """Test validating finite fibers."""
        assert InputValidator.validate_fiber("finite:2") == 2

        with pytest.raises(CyclicValidationError, match="Unknown fiber"):
            InputValidator.validate_fiber("rational")

    def test_validate_rational_valid(self):
        """Test validating exact rationals."""
        assert InputValidator.validate_rational("-3/4") == Fraction(-3, 4)
        assert InputValidator.validate_rational("2") == 2
        assert InputValidator.validate_rational(" 6/8 ") == Fraction(3, 4)

    @pytest.mark.parametrize("text", ["1/0", "1/00", "0.5", "1/", "a/b", "1e3"])
    def test_validate_rational_invalid(self, text):
        """Test rejecting floats, zero denominators and garbage."""
        with pytest.raises(CyclicValidationError, match="exact rational"):
            InputValidator.validate_rational(text)

    def test_validate_values(self):
        """Test validating a comma-separated list."""
        values = InputValidator.validate_values("0, 1/4 ,1/2,1")
        assert values == [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)]

    def test_validate_values_empty(self):
        """Test validating an empty list."""
        with pytest.raises(CyclicValidationError, match="at least one value"):
            InputValidator.validate_values(" , ")
