"""Unit tests for abstract circles and the reconstruction of archimedean sets."""

import dataclasses

import pytest

from src.core.circles.abstract_circle import (
    basepoint_iso,
    circle_axiom_audit,
    enumerate_circle_morphisms,
    is_circle_isomorphism,
    is_circle_morphism,
    quotient_circle,
    quotient_morphism,
    reconstruct,
    reconstruction_map,
    subtract_order,
)
from src.core.circles.archimedean import arc_compose, arc_equal, enumerate_arc_hom, integer_arch
from src.core.exceptions import CircleAxiomError


@pytest.fixture
def circle():
    """Quotient of ℤ with θ = +3."""
    return quotient_circle(integer_arch(3))


@pytest.fixture
def broken_circle(circle):
    """Quotient whose cup forgets 0_0 ∪ 1_0."""
    cup = dict(circle.cup)
    del cup[(circle.zero[0], circle.one[0])]
    return dataclasses.replace(circle, cup=cup)


@pytest.mark.unit
class TestQuotientCircle:
    """Test suite for quotient_circle."""

    def test_sizes(self, circle):
        """Test p points and p(p+1) segments."""
        assert circle.points == (0, 1, 2)
        assert len(circle.segments) == 12
        assert repr(circle) == "<AbstractCircle(|P|=3, |S|=12)>"

    def test_structure_maps(self, circle):
        """Test 0_x, 1_x and the star of a segment."""
        assert circle.zero[1] == (1, 1)
        assert circle.one[1] == (1, 4)
        assert circle.star[(0, 2)] == (2, 3)
        assert circle.cup[((0, 1), (1, 2))] == (0, 2)

    @pytest.mark.parametrize("period", [1, 2, 3, 4])
    def test_axioms_hold(self, period):
        """Test every axiom instance on X/θ."""
        report = circle_axiom_audit(quotient_circle(integer_arch(period)))
        assert report.passed, report.failures
        assert report.name == "circle-axioms"

    def test_broken_cup_fails_unit_axiom(self, broken_circle):
        """Test that a missing 0_x ∪ a is reported."""
        report = circle_axiom_audit(broken_circle)
        assert not report.passed
        assert any(failure.startswith("axiom 3.5") for failure in report.failures)


@pytest.mark.unit
class TestReconstruction:
    """Test suite for the reconstruction X_x of a circle."""

    def test_subtract_order(self, circle):
        """Test that L_0 runs from 0_0 to 1_0."""
        assert subtract_order(circle, 0) == [(0, 0), (0, 1), (0, 2), (0, 3)]

    def test_reconstruct_period(self, circle):
        """Test that X_0 has period 3."""
        assert reconstruct(circle, 0).period == 3

    def test_reconstruction_is_isomorphism(self, circle):
        """Test X_x/θ_x ≅ C."""
        x_set, pmap, smap = reconstruction_map(circle, 1)
        assert is_circle_isomorphism(quotient_circle(x_set), circle, pmap, smap)

    def test_reconstruct_rejects_broken_circle(self, broken_circle):
        """Test that the axioms are checked first."""
        with pytest.raises(CircleAxiomError):
            reconstruct(broken_circle, 0)


@pytest.mark.unit
class TestBasepointChange:
    """Test suite for ψ_xy."""

    @pytest.mark.parametrize(
        ("x", "y", "values"),
        [(0, 1, (1, 2, 3)), (1, 0, (2, 3, 4)), (2, 1, (2, 3, 4)), (2, 0, (1, 2, 3)), (1, 1, (0, 1, 2))],
    )
    def test_values(self, circle, x, y, values):
        """Test the positions of ψ_xy."""
        assert basepoint_iso(circle, x, y).values == values

    def test_cocycle_condition(self, circle):
        """Test ψ_21 followed by ψ_10 equals ψ_20 as morphisms."""
        composed = arc_compose(basepoint_iso(circle, 1, 0), basepoint_iso(circle, 2, 1))
        direct = basepoint_iso(circle, 2, 0)
        assert composed.values == (4, 5, 6)
        assert composed.values != direct.values
        assert arc_equal(composed, direct)


@pytest.mark.unit
class TestMorphisms:
    """Test suite for morphisms of abstract circles."""

    @pytest.mark.parametrize(("p", "q", "count"), [(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 6)])
    def test_morphism_counts(self, p, q, count):
        """Test |Hom(X/θ, Y/θ)| = |Hom_Λ([p−1], [q−1])|."""
        source, target = quotient_circle(integer_arch(p)), quotient_circle(integer_arch(q))
        assert len(list(enumerate_circle_morphisms(source, target))) == count

    def test_quotient_of_arc_morphisms(self):
        """Test that every Arc morphism descends to a circle morphism."""
        x_set, y_set = integer_arch(2), integer_arch(3)
        source, target = quotient_circle(x_set), quotient_circle(y_set)
        for f in enumerate_arc_hom(x_set, y_set):
            pmap, smap = quotient_morphism(f)
            assert is_circle_morphism(source, target, pmap, smap)

    def test_identity_is_isomorphism(self, circle):
        """Test that the identity maps form an isomorphism."""
        pmap = {x: x for x in circle.points}
        smap = {a: a for a in circle.segments}
        assert is_circle_isomorphism(circle, circle, pmap, smap)

    def test_constant_map_is_not_isomorphism(self, circle):
        """Test that collapsing points is refused."""
        small = quotient_circle(integer_arch(1))
        pmap = {x: 0 for x in circle.points}
        smap = {a: (0, 0) for a in circle.segments}
        assert not is_circle_isomorphism(circle, small, pmap, smap)

    def test_bijection_must_preserve_cup_both_ways(self, circle, broken_circle):
        """Test that the identity from a circle with fewer cups is a morphism but not an isomorphism."""
        pmap = {x: x for x in circle.points}
        smap = {a: a for a in circle.segments}
        assert is_circle_morphism(broken_circle, circle, pmap, smap)
        assert not is_circle_morphism(circle, broken_circle, pmap, smap)
        assert not is_circle_isomorphism(broken_circle, circle, pmap, smap)

    def test_relabelled_copy_is_isomorphic(self, circle):
        """Test an isomorphism onto a copy with string labels."""
        point = {x: f"p{x}" for x in circle.points}
        segment = {a: f"s{a[0]}:{a[1]}" for a in circle.segments}
        copy = dataclasses.replace(
            circle,
            points=tuple(point.values()),
            segments=tuple(segment.values()),
            d0={segment[a]: point[x] for a, x in circle.d0.items()},
            d1={segment[a]: point[x] for a, x in circle.d1.items()},
            zero={point[x]: segment[a] for x, a in circle.zero.items()},
            one={point[x]: segment[a] for x, a in circle.one.items()},
            star={segment[a]: segment[b] for a, b in circle.star.items()},
            cup={(segment[a], segment[b]): segment[ab] for (a, b), ab in circle.cup.items()},
        )
        assert is_circle_isomorphism(circle, copy, point, segment)
        assert is_circle_isomorphism(copy, circle, {v: k for k, v in point.items()}, {v: k for k, v in segment.items()})
