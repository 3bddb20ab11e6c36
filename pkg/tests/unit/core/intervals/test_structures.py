"""Unit tests for cyclic structures on sequences."""

from fractions import Fraction

import pytest

from src.core.categories.cyclic import embed_j, lambda_compose, tau, tau_power
from src.core.categories.delta import DeltaMap
from src.core.exceptions import CompositionError, IndexRangeError
from src.core.intervals.interval import RationalUnit
from src.core.intervals.sequences import make_sequence
from src.core.intervals.structures import SimplexCyclicStructure, cyclic_audit, describe_sequence


@pytest.fixture
def simplex_structure():
    """Cyclic structure of the standard simplex."""
    return SimplexCyclicStructure()


@pytest.mark.unit
class TestSimplexCyclicStructure:
    """Test suite for SimplexCyclicStructure."""

    def test_tau_on_known_sequence(self, simplex_structure):
        """Test τ_2 on (0, 1/4, 1/2, 1)."""
        beta = make_sequence(RationalUnit(), [Fraction(1, 4), Fraction(1, 2)])
        assert simplex_structure.tau_n(beta).values == (0, Fraction(1, 4), Fraction(3, 4), 1)

    def test_rotate_full_turn(self, simplex_structure):
        """Test that n + 1 rotations give back β."""
        beta = make_sequence(RationalUnit(), [Fraction(1, 5), Fraction(1, 2), Fraction(2, 3)])
        assert simplex_structure.rotate(beta, 4) == beta

    def test_act_matches_rotate(self, simplex_structure):
        """Test that acting by τ^2 rotates twice."""
        beta = make_sequence(RationalUnit(), [Fraction(1, 4), Fraction(1, 2)])
        assert simplex_structure.act(tau_power(2, 2), beta) == simplex_structure.rotate(beta, 2)

    def test_act_is_functorial(self, simplex_structure):
        """Test F(f then g) = F(g)∘F(f) on a rotation followed by a degeneracy."""
        beta = make_sequence(RationalUnit(), [Fraction(1, 4), Fraction(1, 2)])
        degeneracy = DeltaMap(2, 1, (0, 1, 1))
        composite = lambda_compose(tau(2), embed_j(degeneracy))
        rotated = simplex_structure.act(tau(2), beta)
        assert simplex_structure.act(composite, beta) == simplex_structure.act(degeneracy, rotated)

    def test_act_rank_mismatch(self, simplex_structure):
        """Test that the map must start at the rank of β."""
        beta = make_sequence(RationalUnit(), [Fraction(1, 2)])
        with pytest.raises(CompositionError):
            simplex_structure.act(tau(2), beta)

    def test_name(self, simplex_structure):
        """Test the report name."""
        assert simplex_structure.name == "SimplexCyclicStructure(rational-unit)"


@pytest.mark.unit
class TestCyclicAudit:
    """Test suite for cyclic_audit."""

    def test_simplex_structure_passes(self, simplex_structure):
        """Test that the simplex structure satisfies the presentation of Λ."""
        report = cyclic_audit(simplex_structure, 3, samples=8)
        assert report.passed
        assert report.name == "cyclic-structure:rational-unit"
        assert report.checked > 0

    def test_needs_positive_rank(self, simplex_structure):
        """Test that n_max must be at least 1."""
        with pytest.raises(IndexRangeError):
            cyclic_audit(simplex_structure, 0)

    def test_describe_sequence(self):
        """Test the compact text form."""
        beta = make_sequence(RationalUnit(), [Fraction(1, 2)])
        assert describe_sequence(beta) == "(0, 1/2, 1)"
