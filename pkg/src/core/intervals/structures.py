"""Structures cycliques sur un point p_I: extension de F_I de Δ à Λ."""

from abc import ABC, abstractmethod
from collections.abc import Sequence

from src.core.categories.cyclic import LambdaMap, delta_lambda_decompose, presentation_instances, tau
from src.core.categories.delta import DeltaMap
from src.core.dtos import AuditReportDTO
from src.core.exceptions import CompositionError, IndexRangeError
from src.core.intervals.interval import Interval, RationalUnit
from src.core.intervals.sequences import MonotoneSeq, sample_sequence, seq_act
from src.core.intervals.simplex import fin_affine_act, simplex_decode, simplex_encode
from src.core.sampling import make_rng
from src.utils.config import DEFAULT_SAMPLES, DEFAULT_SEED
from src.utils.logger import get_logger

logger = get_logger(__name__)


def describe_sequence(beta: MonotoneSeq) -> str:
    """Compact text form used in audit failures."""
    return "(" + ", ".join(str(v) for v in beta.values) + ")"


class CyclicStructure(ABC):
    """Famille de rotations τ_n sur F_I(n) qui prolonge l'action de Δ à Λ."""

    @property
    @abstractmethod
    def interval(self) -> Interval:
        """Underlying interval I."""

    @property
    def name(self) -> str:
        """Identifier used in reports."""
        return f"{type(self).__name__}({self.interval.name})"

    @abstractmethod
    def tau_n(self, beta: MonotoneSeq) -> MonotoneSeq:
        """F(τ_n) on a sequence of rank n."""

    def rotate(self, beta: MonotoneSeq, times: int) -> MonotoneSeq:
        """Apply F(τ_n) ``times`` times (reduced mod n+1)."""
        for _ in range(times % (beta.rank + 1)):
            beta = self.tau_n(beta)
        return beta

    def act(self, f: LambdaMap | DeltaMap, beta: MonotoneSeq) -> MonotoneSeq:
        """F(f) for f = j(h)∘τ^a: rotate a times, then apply h.

        Raises:
            CompositionError: If ``f`` does not start at the rank of ``beta``

        """
        if f.source_rank != beta.rank:
            raise CompositionError(f"Map starts at [{f.source_rank}] but the sequence has rank {beta.rank}")
        if isinstance(f, DeltaMap):
            return seq_act(f, beta)
        h, a = delta_lambda_decompose(f)
        return seq_act(h, self.rotate(beta, a))

    def act_word(self, word: Sequence[LambdaMap | DeltaMap], beta: MonotoneSeq) -> MonotoneSeq:
        """F of a written-order word: the last letter acts first."""
        for letter in reversed(word):
            beta = self._act_letter(letter, beta)
        return beta

    def _act_letter(self, letter: LambdaMap | DeltaMap, beta: MonotoneSeq) -> MonotoneSeq:
        if isinstance(letter, LambdaMap) and letter == tau(letter.source_rank):
            return self.tau_n(beta)
        return self.act(letter, beta)


class SimplexCyclicStructure(CyclicStructure):
    """Structure portée par le simplexe standard: τ agit sur les coordonnées barycentriques via μ(τ)."""

    @property
    def interval(self) -> Interval:
        """Return the rational unit interval."""
        return RationalUnit()

    def tau_n(self, beta: MonotoneSeq) -> MonotoneSeq:
        """Encode, permute the vertices, decode."""
        return simplex_decode(fin_affine_act(tau(beta.rank), simplex_encode(beta)))


def cyclic_audit(
    cs: CyclicStructure, n_max: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> AuditReportDTO:
    """Check τ_n^{n+1} = id and the rotation relations on sampled sequences.

    Args:
        cs: Structure to audit
        n_max: Largest rank of the objects involved
        samples: Sequences drawn per relation instance
        seed: Seed of the sampler

    Returns:
        Report listing at most one counterexample per relation instance

    Raises:
        IndexRangeError: If n_max < 1

    """
    if n_max < 1:
        raise IndexRangeError(f"n_max must be at least 1, got {n_max}")

    rng = make_rng(seed)
    failures = []
    checked = 0
    for instance in presentation_instances(n_max):
        for _ in range(samples):
            beta = sample_sequence(cs.interval, instance.source, rng)
            checked += 1
            left = cs.act_word(instance.lhs, beta)
            right = cs.act_word(instance.rhs, beta)
            if left.values != right.values:
                failures.append(
                    f"{instance.name} on {describe_sequence(beta)}: "
                    f"{describe_sequence(left)} != {describe_sequence(right)}"
                )
                logger.debug("[AUDIT] %s fails on %s", instance.name, describe_sequence(beta))
                break

    if failures:
        logger.warning("[AUDIT] %s: %d relation instances fail", cs.name, len(failures))
    logger.info("[AUDIT] %s up to rank %d: %d checks", cs.name, n_max, checked)
    return AuditReportDTO(name=f"cyclic-structure:{cs.interval.name}", checked=checked, failures=tuple(failures))
