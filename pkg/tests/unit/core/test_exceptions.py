"""Unit tests for the exception hierarchy."""

import pytest

from src.core import exceptions
from src.core.exceptions import CyclicError, ExpressionParseError


@pytest.mark.unit
class TestExceptions:
    """Test suite for CyclicError and its subclasses."""

    def test_message_and_details(self):
        """Test the attributes kept for the CLI."""
        error = CyclicError("Composition failed", details="[1] vs [2]")
        assert str(error) == "Composition failed"
        assert error.message == "Composition failed"
        assert error.details == "[1] vs [2]"

    def test_details_default(self):
        """Test that details default to the empty string."""
        assert CyclicError("x").details == ""

    def test_parse_error_keeps_token(self):
        """Test that the offending token is stored."""
        error = ExpressionParseError("Unknown token", token="x0")
        assert error.token == "x0"
        assert error.message == "Unknown token"

    @pytest.mark.parametrize(
        "name",
        [
            "InvalidMorphismError",
            "CompositionError",
            "IndexRangeError",
            "NotAnAutomorphismError",
            "InvalidSequenceError",
            "GroupMembershipError",
            "NotACyclicStructureError",
            "TruncationError",
            "CircleAxiomError",
            "PayloadError",
            "CyclicValidationError",
            "RegistryError",
        ],
    )
    def test_subclasses_share_base(self, name):
        """Test that every library error is a CyclicError."""
        error_class = getattr(exceptions, name)
        with pytest.raises(CyclicError):
            raise error_class("failure")
