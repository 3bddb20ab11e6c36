"""Unit tests for monotone sequences and the Δ-action."""

import random
from fractions import Fraction

import pytest
from hypothesis import given

from src.core.categories.delta import DELTA, SIGMA, DeltaMap
from src.core.exceptions import CompositionError, IndexRangeError, InvalidSequenceError
from src.core.intervals.interval import FiniteInterval, RationalUnit
from src.core.intervals.sequences import (
    MonotoneSeq,
    make_sequence,
    monotone_sequences,
    sample_sequence,
    seq_act,
    seq_act_dual,
    seq_act_generator,
)
from tests.strategies import delta_maps


@pytest.mark.unit
class TestMonotoneSeq:
    """Test suite for MonotoneSeq validation."""

    def test_valid_sequence(self):
        """Test a weak sequence in 2*."""
        beta = MonotoneSeq(FiniteInterval(2), 2, (0, 1, 1, 3))
        assert beta.interior == (1, 1)
        assert not beta.is_strict()
        assert beta.first_repeat() == 1

    @pytest.mark.parametrize(
        "values",
        [(1, 2, 3), (0, 2, 2), (0, 2, 1, 3), (0, 5, 3)],
    )
    def test_invalid_sequences(self, values):
        """Test wrong endpoints, decreasing values and values outside 2*."""
        with pytest.raises(InvalidSequenceError):
            MonotoneSeq(FiniteInterval(2), len(values) - 2, values)

    def test_wrong_length(self):
        """Test that rank n needs n + 2 values."""
        with pytest.raises(InvalidSequenceError, match="needs 3 values"):
            MonotoneSeq(FiniteInterval(2), 1, (0, 3))

    def test_make_sequence_adds_endpoints(self):
        """Test that make_sequence wraps the interior with b and t."""
        beta = make_sequence(RationalUnit(), [Fraction(1, 2)])
        assert beta.values == (0, Fraction(1, 2), 1)
        assert beta.is_strict()
        assert beta.first_repeat() is None


@pytest.mark.unit
class TestGeneratorAction:
    """Test suite for seq_act_generator."""

    def test_degeneracy_removes_entry(self):
        """Test that σ_0 removes β_1."""
        beta = MonotoneSeq(FiniteInterval(2), 2, (0, 1, 2, 3))
        assert seq_act_generator(SIGMA, 0, beta).values == (0, 2, 3)

    def test_face_repeats_entry(self):
        """Test that δ_1 repeats β_1."""
        beta = MonotoneSeq(FiniteInterval(2), 2, (0, 1, 2, 3))
        assert seq_act_generator(DELTA, 1, beta).values == (0, 1, 1, 2, 3)

    def test_index_out_of_range(self):
        """Test σ_j with j ≥ n."""
        beta = MonotoneSeq(FiniteInterval(2), 1, (0, 1, 3))
        with pytest.raises(IndexRangeError):
            seq_act_generator(SIGMA, 1, beta)

    def test_unknown_kind(self):
        """Test that only σ and δ act."""
        beta = MonotoneSeq(FiniteInterval(2), 1, (0, 1, 3))
        with pytest.raises(IndexRangeError, match="Unknown generator"):
            seq_act_generator("tau", 0, beta)


@pytest.mark.unit
class TestSeqAct:
    """Test suite for the covariant action of Δ."""

    @given(delta_maps(max_rank=3))
    def test_generators_agree_with_dual_formula(self, phi):
        """Test that the generator-wise action equals β∘φ^*."""
        rng = random.Random(sum(phi.values))
        beta = sample_sequence(RationalUnit(), phi.source_rank, rng)
        assert seq_act(phi, beta) == seq_act_dual(phi, beta)

    def test_every_sequence_of_a_finite_interval(self):
        """Test both formulas on all of F_{2*}(2) and all maps [2] → [1]."""
        interval = FiniteInterval(2)
        phi = DeltaMap(2, 1, (0, 1, 1))
        for beta in monotone_sequences(interval, 2):
            assert seq_act(phi, beta) == seq_act_dual(phi, beta)

    def test_rank_mismatch(self):
        """Test that φ must start at the rank of β."""
        beta = MonotoneSeq(FiniteInterval(2), 1, (0, 1, 3))
        with pytest.raises(CompositionError):
            seq_act(DeltaMap(0, 0, (0,)), beta)
        with pytest.raises(CompositionError):
            seq_act_dual(DeltaMap(0, 0, (0,)), beta)


@pytest.mark.unit
class TestEnumerationAndSampling:
    """Test suite for monotone_sequences and sample_sequence."""

    def test_count(self):
        """Test |F_{1*}(2)| = C(4, 2)."""
        assert len(list(monotone_sequences(FiniteInterval(1), 2))) == 6

    def test_strict_sample(self):
        """Test that strict samples have distinct interior values."""
        beta = sample_sequence(RationalUnit(), 3, random.Random(1), strict=True)
        assert beta.is_strict()

    def test_strict_sample_falls_back(self):
        """Test that a too small interval still yields a weak sequence."""
        beta = sample_sequence(FiniteInterval(0), 3, random.Random(1), strict=True)
        assert beta.rank == 3
        assert not beta.is_strict()
