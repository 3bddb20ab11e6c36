"""Unit tests for the periodic PL homeomorphism model."""

import random
from fractions import Fraction
from itertools import islice

import pytest

from src.core.exceptions import InvalidMorphismError
from src.core.groups.piecewise_linear import (
    PLElement,
    PLGroup,
    dense_sequence,
    first_moved_point,
    noncommuting_pair,
    pl_compare,
    pl_compose,
    pl_eval,
    pl_from_points,
    pl_identity,
    pl_inverse,
    pl_translation,
)

F = Fraction


@pytest.mark.unit
class TestPLElement:
    """Test suite for PLElement and evaluation."""

    def test_evaluation_is_periodic(self):
        """Test φ(1/4), φ(3/4) and φ(5/4) for the kinked element."""
        phi, _ = noncommuting_pair()
        assert pl_eval(phi, F(1, 4)) == F(1, 8)
        assert phi(F(3, 4)) == F(5, 8)
        assert phi(F(5, 4)) == F(9, 8)

    def test_needs_breakpoint_at_zero(self):
        """Test that the first abscissa must be 0."""
        with pytest.raises(InvalidMorphismError, match="x = 0"):
            PLElement(((F(1, 2), F(1, 2)),))

    def test_rejects_decreasing_values(self):
        """Test that values must increase within one period."""
        with pytest.raises(InvalidMorphismError, match="increase strictly"):
            PLElement(((F(0), F(0)), (F(1, 2), F(-1, 4))))

    def test_rejects_redundant_breakpoint(self):
        """Test that collinear breakpoints are refused."""
        with pytest.raises(InvalidMorphismError, match="Redundant"):
            PLElement(((F(0), F(0)), (F(1, 2), F(1, 2))))

    def test_repr(self):
        """Test the compact form."""
        assert repr(pl_translation(F(1, 2))) == "PL[(0, 1/2)]"


@pytest.mark.unit
class TestFromPoints:
    """Test suite for pl_from_points."""

    @pytest.mark.parametrize(
        "points",
        [[(0, 0), (F(1, 2), F(1, 2))], [(F(1, 2), F(1, 2))], [(3, 3)]],
    )
    def test_identity_is_recovered(self, points):
        """Test that collinear or shifted points give the identity."""
        assert pl_from_points(points) == pl_identity()

    def test_interpolates_value_at_zero(self):
        """Test that a missing value at 0 is interpolated across the period."""
        assert pl_from_points([(F(1, 2), 1)]) == pl_translation(F(1, 2))

    def test_conflicting_values(self):
        """Test two values at the same reduced abscissa."""
        with pytest.raises(InvalidMorphismError, match="Two values"):
            pl_from_points([(0, 0), (1, 2)])

    def test_empty(self):
        """Test that at least one point is required."""
        with pytest.raises(InvalidMorphismError):
            pl_from_points([])

    def test_not_increasing(self):
        """Test points that wrap past one period."""
        with pytest.raises(InvalidMorphismError, match="not increasing"):
            pl_from_points([(0, 0), (F(1, 2), 2)])


@pytest.mark.unit
class TestGroupLaw:
    """Test suite for composition and inverses."""

    def test_inverse_of_kinked_element(self):
        """Test that φ⁻¹ swaps the breakpoint coordinates."""
        phi, _ = noncommuting_pair()
        assert pl_inverse(phi) == PLElement(((F(0), F(0)), (F(1, 4), F(1, 2))))

    def test_compose_with_inverse(self):
        """Test φ then φ⁻¹ = id."""
        phi, _ = noncommuting_pair()
        assert pl_compose(phi, pl_inverse(phi)) == pl_identity()

    def test_group_product_order(self):
        """Test (ab)(x) = a(b(x)) on the non-commuting pair."""
        phi, psi = noncommuting_pair()
        group = PLGroup()
        assert group.mul(phi, psi)(0) == F(1, 4)
        assert group.mul(psi, phi)(0) == F(1, 2)
        assert group.mul(phi, psi) != group.mul(psi, phi)

    def test_translations_add(self):
        """Test that translations compose by addition."""
        assert pl_compose(pl_translation(F(1, 3)), pl_translation(F(1, 2))) == pl_translation(F(5, 6))

    def test_z_is_central(self):
        """Test that the translation by 1 commutes with φ."""
        phi, _ = noncommuting_pair()
        group = PLGroup()
        assert group.mul(phi, group.z) == group.mul(group.z, phi)


@pytest.mark.unit
class TestOrder:
    """Test suite for the dense-sequence left order."""

    def test_dense_sequence_prefix(self):
        """Test the first six elements."""
        assert list(islice(dense_sequence(), 6)) == [F(0), F(1, 2), F(1, 3), F(2, 3), F(1, 4), F(3, 4)]

    def test_first_moved_point(self):
        """Test that the kinked element first moves 1/2."""
        phi, _ = noncommuting_pair()
        assert first_moved_point(phi) == F(1, 2)
        assert first_moved_point(pl_identity()) is None
        assert first_moved_point(pl_translation(F(1, 3))) == 0

    def test_first_moved_point_skips_fixed_region(self):
        """Test an element fixing [0, 1/2] and moving 2/3 first."""
        h = pl_from_points([(0, 0), (F(1, 2), F(1, 2)), (F(3, 4), F(7, 8))])
        assert first_moved_point(h) == F(2, 3)

    def test_compare(self):
        """Test id < translation and φ < id."""
        phi, _ = noncommuting_pair()
        assert pl_compare(pl_identity(), pl_translation(F(1, 2))) == -1
        assert pl_compare(pl_identity(), phi) == 1
        assert pl_compare(phi, phi) == 0

    def test_sample_is_element(self):
        """Test that sampled elements are PL elements."""
        group = PLGroup()
        assert all(group.contains(group.sample(random.Random(seed))) for seed in range(10))
