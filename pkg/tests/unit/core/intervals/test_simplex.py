"""Unit tests for the barycentric encoding of the standard simplex."""

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from src.core.categories.cyclic import FinMap, embed_j, tau
from src.core.categories.delta import enumerate_delta_hom
from src.core.exceptions import CompositionError, InvalidSequenceError
from src.core.groups.ftuples import make_cyclic_structure
from src.core.groups.ordered_group import RationalGroup
from src.core.intervals.interval import FiniteInterval, RationalUnit
from src.core.intervals.sequences import MonotoneSeq, make_sequence, seq_act
from src.core.intervals.simplex import BarycentricPoint, fin_affine_act, simplex_decode, simplex_encode
from src.core.intervals.structures import SimplexCyclicStructure

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


@pytest.mark.unit
class TestBarycentricPoint:
    """Test suite for BarycentricPoint."""

    def test_coordinates_are_fractions(self):
        """Test that integer coordinates are converted."""
        assert BarycentricPoint(1, (1, 0)).coordinates == (Fraction(1), Fraction(0))

    @pytest.mark.parametrize("coordinates", [(HALF, HALF, HALF), (Fraction(3, 2), -HALF)])
    def test_rejects_non_barycentric(self, coordinates):
        """Test sums other than 1 and negative weights."""
        with pytest.raises(InvalidSequenceError):
            BarycentricPoint(len(coordinates) - 1, coordinates)


@pytest.mark.unit
class TestEncoding:
    """Test suite for simplex_encode and simplex_decode."""

    def test_encode(self):
        """Test u_j = β_{j+1} − β_j."""
        beta = make_sequence(RationalUnit(), [QUARTER, HALF])
        assert simplex_encode(beta).coordinates == (QUARTER, QUARTER, HALF)

    def test_decode_inverts_encode(self):
        """Test decode∘encode = id."""
        beta = make_sequence(RationalUnit(), [QUARTER, QUARTER, Fraction(2, 3)])
        assert simplex_decode(simplex_encode(beta)) == beta

    def test_encode_needs_rational_unit(self):
        """Test that a finite interval cannot be encoded."""
        with pytest.raises(InvalidSequenceError, match="rational-unit"):
            simplex_encode(MonotoneSeq(FiniteInterval(1), 0, (0, 2)))


@pytest.mark.unit
class TestAffineAction:
    """Test suite for fin_affine_act."""

    def test_rotation_permutes_vertices(self):
        """Test that μ(τ_2) sends the weights (1/4, 1/4, 1/2) to (1/4, 1/2, 1/4)."""
        u = BarycentricPoint(2, (QUARTER, QUARTER, HALF))
        assert fin_affine_act(tau(2), u).coordinates == (QUARTER, HALF, QUARTER)

    def test_collapsing_map_adds_weights(self):
        """Test that a non-injective vertex map sums coordinates."""
        u = BarycentricPoint(2, (QUARTER, QUARTER, HALF))
        assert fin_affine_act(FinMap(3, 2, (0, 0, 1)), u).coordinates == (HALF, HALF)

    def test_size_mismatch(self):
        """Test that the vertex map must match the simplex."""
        with pytest.raises(CompositionError):
            fin_affine_act(tau(1), BarycentricPoint(2, (QUARTER, QUARTER, HALF)))


def sequences_with_small_denominators(rank, max_denominator=6):
    """Every sequence of the given rank whose interior values have denominator at most ``max_denominator``."""
    grid = sorted({Fraction(p, q) for q in range(1, max_denominator + 1) for p in range(q + 1)})
    return [make_sequence(RationalUnit(), interior) for interior in combinations_with_replacement(grid, rank)]


@pytest.mark.unit
class TestAgreementWithSequences:
    """Test suite comparing the simplex model with monotone sequences."""

    def test_grid_size(self):
        """Test the 13 values of denominator ≤ 6 and the 455 sequences of rank 3."""
        assert len(sequences_with_small_denominators(1)) == 13
        assert len(sequences_with_small_denominators(3)) == 455

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_delta_action_matches_seq_act(self, n):
        """Test decode(φ · encode(β)) = F(φ)(β) for every φ: [n] → [m] with m ≤ 3."""
        for beta in sequences_with_small_denominators(n):
            u = simplex_encode(beta)
            for m in range(4):
                for phi in enumerate_delta_hom(n, m):
                    assert simplex_decode(fin_affine_act(embed_j(phi), u)) == seq_act(phi, beta)

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_rotation_matches_rational_group(self, n):
        """Test that τ on the simplex equals τ of the structure of (ℚ, +, 1)."""
        simplex, rational = SimplexCyclicStructure(), make_cyclic_structure(RationalGroup())
        for beta in sequences_with_small_denominators(n):
            assert simplex.tau_n(beta) == rational.tau_n(beta)
