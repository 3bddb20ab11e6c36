"""Unit tests for interval models."""

import random
from fractions import Fraction

import pytest

from src.core.exceptions import InvalidSequenceError
from src.core.groups.ordered_group import IntegerGroup
from src.core.intervals.interval import (
    ChainInterval,
    FiniteInterval,
    GroupInterval,
    RationalUnit,
    interval_from_name,
)


@pytest.mark.unit
class TestFiniteInterval:
    """Test suite for FiniteInterval."""

    def test_endpoints_and_elements(self):
        """Test that n* = {0, …, n+1}."""
        interval = FiniteInterval(2)
        assert (interval.bottom, interval.top) == (0, 3)
        assert interval.elements() == (0, 1, 2, 3)
        assert interval.name == "finite:2"

    def test_contains_rejects_booleans(self):
        """Test that booleans are not integers of the interval."""
        interval = FiniteInterval(1)
        assert interval.contains(2)
        assert not interval.contains(3)
        assert not interval.contains(True)

    def test_negative_rank(self):
        """Test that n must be non-negative."""
        with pytest.raises(InvalidSequenceError):
            FiniteInterval(-1)

    def test_sample_stays_inside(self):
        """Test that samples lie in the interval."""
        interval = FiniteInterval(3)
        rng = random.Random(0)
        assert all(interval.contains(interval.sample_element(rng)) for _ in range(50))


@pytest.mark.unit
class TestRationalUnit:
    """Test suite for RationalUnit."""

    def test_order(self):
        """Test the rational order."""
        interval = RationalUnit()
        assert interval.lt(Fraction(1, 3), Fraction(1, 2))
        assert interval.sorted([Fraction(1, 2), Fraction(0), Fraction(1, 4)]) == [
            Fraction(0),
            Fraction(1, 4),
            Fraction(1, 2),
        ]

    def test_not_finite(self):
        """Test that listing elements is refused."""
        interval = RationalUnit()
        assert not interval.is_finite
        with pytest.raises(InvalidSequenceError, match="not finite"):
            interval.elements()


@pytest.mark.unit
class TestOtherIntervals:
    """Test suite for group and chain intervals."""

    def test_group_interval(self):
        """Test that [1, z] of (ℤ, +) with z = 3 has endpoints 0 and 3."""
        interval = GroupInterval(IntegerGroup(3))
        assert (interval.bottom, interval.top) == (0, 3)
        assert interval.contains(2)
        assert not interval.contains(4)

    def test_chain_order(self):
        """Test that a chain is ordered by position."""
        chain = ChainInterval(("b", "x", "t"))
        assert chain.compare("x", "b") == 1
        assert chain.index("t") == 2
        assert chain.name == "chain:3"

    def test_chain_needs_distinct_labels(self):
        """Test that repeated labels are refused."""
        with pytest.raises(InvalidSequenceError):
            ChainInterval(("a", "a"))


@pytest.mark.unit
class TestIntervalFromName:
    """Test suite for interval_from_name."""

    @pytest.mark.parametrize(
        ("name", "expected"),
        [("rational-unit", RationalUnit()), ("finite:4", FiniteInterval(4))],
    )
    def test_known_names(self, name, expected):
        """Test that names rebuild their interval."""
        assert interval_from_name(name) == expected

    def test_chain_needs_labels(self):
        """Test that a chain name is rebuilt from its labels."""
        assert interval_from_name("chain:2", ["a", "b"]) == ChainInterval(("a", "b"))

    @pytest.mark.parametrize("name", ["finite:x", "chain:2", "real"])
    def test_unknown_names(self, name):
        """Test that unknown names are refused."""
        with pytest.raises(InvalidSequenceError, match="Unknown interval"):
            interval_from_name(name)
