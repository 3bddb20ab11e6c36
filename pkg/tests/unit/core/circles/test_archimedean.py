"""Unit tests for archimedean sets and the category Arc."""

import pytest

from src.core.categories.cyclic import enumerate_lambda_hom, lambda_compose, tau
from src.core.circles.archimedean import (
    ArcMorphism,
    ArchElement,
    arc_canonical,
    arc_compose,
    arc_equal,
    arc_eval,
    arc_identity,
    arc_theta,
    arc_to_lambda,
    archimedean_audit,
    enumerate_arc_hom,
    integer_arch,
    interval_to_arch,
    lambda_to_arc,
)
from src.core.exceptions import CompositionError, InvalidMorphismError, InvalidSequenceError
from src.core.intervals.interval import RationalUnit


@pytest.mark.unit
class TestArchimedeanSet:
    """Test suite for ArchimedeanSet."""

    def test_integer_arch_period(self):
        """Test that ℤ with θ = +3 comes from the interval 2*."""
        x_set = integer_arch(3)
        assert x_set.period == 3
        assert x_set.name == "arch:finite:2"

    def test_top_is_next_bottom(self):
        """Test (k, t) ∼ (k+1, b)."""
        assert integer_arch(3).element(0, 3) == ArchElement(1, 0)

    def test_element_outside_fiber(self):
        """Test that fiber values are checked."""
        with pytest.raises(InvalidSequenceError):
            integer_arch(3).element(0, 7)

    def test_positions(self):
        """Test the order isomorphism with ℤ."""
        x_set = integer_arch(3)
        assert x_set.position(ArchElement(1, 2)) == 5
        assert x_set.element_at(5) == ArchElement(1, 2)
        assert x_set.element_at(-1) == ArchElement(-1, 2)

    def test_order_and_shift(self):
        """Test the lexicographic order and θ."""
        x_set = integer_arch(2)
        x = ArchElement(0, 1)
        assert x_set.compare(x_set.theta(x), x) == 1
        assert x_set.theta(x, -2) == ArchElement(-2, 1)

    def test_period_needs_finite_fiber(self):
        """Test that a rational fiber has no period."""
        with pytest.raises(InvalidSequenceError):
            _ = interval_to_arch(RationalUnit()).period

    def test_period_must_be_positive(self):
        """Test that θ must move points."""
        with pytest.raises(InvalidSequenceError):
            integer_arch(0)

    @pytest.mark.parametrize("x_set", [integer_arch(1), integer_arch(4), interval_to_arch(RationalUnit())])
    def test_audit_passes(self, x_set):
        """Test θ(x) > x and the archimedean property."""
        assert archimedean_audit(x_set, samples=50).passed


@pytest.mark.unit
class TestArcMorphism:
    """Test suite for morphisms of Arc."""

    def test_rejects_non_monotone(self):
        """Test that values must increase."""
        with pytest.raises(InvalidMorphismError):
            ArcMorphism(integer_arch(2), integer_arch(2), (2, 0))

    def test_rejects_large_rise(self):
        """Test that one period may rise by at most q."""
        with pytest.raises(InvalidMorphismError):
            ArcMorphism(integer_arch(2), integer_arch(2), (0, 3))

    def test_rejects_wrong_length(self):
        """Test that p values are required."""
        with pytest.raises(InvalidMorphismError, match="Expected 2 values"):
            ArcMorphism(integer_arch(2), integer_arch(2), (0,))

    def test_evaluation_is_equivariant(self):
        """Test f(x + p) = f(x) + q."""
        f = ArcMorphism(integer_arch(2), integer_arch(3), (1, 2))
        assert arc_eval(f, 2) == 4
        assert f(-1) == -1

    def test_theta_equals_identity(self):
        """Test that θ is the identity as a morphism."""
        x_set = integer_arch(3)
        assert arc_theta(x_set).values == (3, 4, 5)
        assert arc_equal(arc_theta(x_set), arc_identity(x_set))
        assert arc_canonical(arc_theta(x_set, -2)) == arc_identity(x_set)

    def test_compose(self):
        """Test that composition applies f first."""
        f = ArcMorphism(integer_arch(2), integer_arch(3), (1, 2))
        g = ArcMorphism(integer_arch(3), integer_arch(1), (0, 0, 1))
        assert arc_compose(f, g).values == (0, 1)

    def test_compose_mismatch(self):
        """Test that periods must match."""
        with pytest.raises(CompositionError):
            arc_compose(arc_identity(integer_arch(2)), arc_identity(integer_arch(3)))


@pytest.mark.unit
class TestLambdaCorrespondence:
    """Test suite for the identification of Arc with Λ."""

    @pytest.mark.parametrize(("p", "q"), [(1, 1), (2, 3), (3, 2)])
    def test_hom_sizes(self, p, q):
        """Test |Hom_Arc| = |Hom_Λ([p−1], [q−1])|."""
        homs = list(enumerate_arc_hom(integer_arch(p), integer_arch(q)))
        assert len(homs) == len(enumerate_lambda_hom(p - 1, q - 1))

    def test_round_trip(self):
        """Test that τ_2 survives the passage through Arc."""
        assert arc_to_lambda(lambda_to_arc(tau(2))) == tau(2)

    def test_composition_is_preserved(self):
        """Test that composition in Arc matches composition in Λ."""
        f, g = tau(2), lambda_compose(tau(2), tau(2))
        composed = arc_compose(lambda_to_arc(f), lambda_to_arc(g))
        assert arc_to_lambda(composed) == lambda_compose(f, g)
