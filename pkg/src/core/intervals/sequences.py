"""Suites croissantes n* → I et action covariante de Δ sur ces suites."""

import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Any

from src.core.categories.delta import DELTA, SIGMA, DeltaMap, delta_dual, epi_mono_factor
from src.core.exceptions import CompositionError, IndexRangeError, InvalidSequenceError
from src.core.intervals.interval import Interval
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class MonotoneSeq:
    """Élément β de F_I(n): b = β_0 ≤ β_1 ≤ … ≤ β_{n+1} = t."""

    interval: Interval
    rank: int
    values: tuple[Any, ...]

    def __post_init__(self) -> None:
        """Check endpoints, membership and monotonicity."""
        object.__setattr__(self, "values", tuple(self.values))
        if self.rank < 0 or len(self.values) != self.rank + 2:
            raise InvalidSequenceError(f"Rank {self.rank} needs {self.rank + 2} values, got {len(self.values)}")
        interval = self.interval
        if not all(interval.contains(v) for v in self.values):
            raise InvalidSequenceError(f"Values leave the interval {interval.name}")
        if interval.compare(self.values[0], interval.bottom) != 0:
            raise InvalidSequenceError("A monotone sequence must start at the bottom of the interval")
        if interval.compare(self.values[-1], interval.top) != 0:
            raise InvalidSequenceError("A monotone sequence must end at the top of the interval")
        if any(interval.lt(b, a) for a, b in zip(self.values, self.values[1:], strict=False)):
            raise InvalidSequenceError("Monotone sequence values decrease")

    def __getitem__(self, index: int) -> Any:
        """Return β_index."""
        return self.values[index]

    @property
    def interior(self) -> tuple[Any, ...]:
        """β_1..β_n."""
        return self.values[1:-1]

    def is_strict(self) -> bool:
        """True when b = β_0 < β_1 < … < β_{n+1} = t."""
        return all(self.interval.lt(a, b) for a, b in zip(self.values, self.values[1:], strict=False))

    def first_repeat(self) -> int | None:
        """Smallest i with β_i = β_{i+1}, or None."""
        for i in range(self.rank + 1):
            if self.interval.compare(self.values[i], self.values[i + 1]) == 0:
                return i
        return None


def make_sequence(interval: Interval, interior: Sequence[Any]) -> MonotoneSeq:
    """Build (b, *interior, t)."""
    return MonotoneSeq(interval, len(interior), (interval.bottom, *interior, interval.top))


def seq_act_generator(kind: str, j: int, beta: MonotoneSeq) -> MonotoneSeq:
    """Apply F(σ_j) or F(δ_j) to ``beta``.

    F(σ_j) removes β_{j+1}; F(δ_j) repeats β_j.

    Raises:
        IndexRangeError: If the index does not fit the rank of ``beta``

    """
    n = beta.rank
    if kind == SIGMA:
        if not 0 <= j < n:
            raise IndexRangeError(f"σ_{j} does not act on sequences of rank {n}")
        values = beta.values[: j + 1] + beta.values[j + 2 :]
        return MonotoneSeq(beta.interval, n - 1, values)
    if kind == DELTA:
        if not 0 <= j <= n + 1:
            raise IndexRangeError(f"δ_{j} does not act on sequences of rank {n}")
        values = beta.values[: j + 1] + beta.values[j:]
        return MonotoneSeq(beta.interval, n + 1, values)
    raise IndexRangeError(f"Unknown generator kind: {kind!r}")


def seq_act(phi: DeltaMap, beta: MonotoneSeq) -> MonotoneSeq:
    """Covariant action F(φ): F(n) → F(m) for φ: [n] → [m].

    The generators of the normal form of φ are applied one by one.

    Raises:
        CompositionError: If φ does not start at the rank of ``beta``

    """
    if phi.source_rank != beta.rank:
        raise CompositionError(f"φ starts at [{phi.source_rank}] but the sequence has rank {beta.rank}")
    delta_indices, sigma_indices = epi_mono_factor(phi)
    result = beta
    for j in reversed(sigma_indices):
        result = seq_act_generator(SIGMA, j, result)
    for i in reversed(delta_indices):
        result = seq_act_generator(DELTA, i, result)
    return result


def seq_act_dual(phi: DeltaMap, beta: MonotoneSeq) -> MonotoneSeq:
    """Direct formula β∘φ^* with φ^* = delta_dual(φ)."""
    if phi.source_rank != beta.rank:
        raise CompositionError(f"φ starts at [{phi.source_rank}] but the sequence has rank {beta.rank}")
    dual = delta_dual(phi)
    return MonotoneSeq(beta.interval, phi.target_rank, tuple(beta.values[w] for w in dual.values))


def monotone_sequences(interval: Interval, rank: int) -> Iterator[MonotoneSeq]:
    """Enumerate F_I(rank) for a finite interval."""
    for interior in combinations_with_replacement(interval.elements(), rank):
        yield make_sequence(interval, interior)


def sample_sequence(interval: Interval, rank: int, rng: random.Random, strict: bool = False) -> MonotoneSeq:
    """Draw an element of F_I(rank); ``strict`` asks for distinct interior values.

    Strict draws retry a bounded number of times and fall back to a weak sequence
    when the interval is too small.
    """
    for _ in range(64):
        interior = interval.sorted(interval.sample_element(rng) for _ in range(rank))
        beta = make_sequence(interval, interior)
        if not strict or beta.is_strict():
            return beta
    logger.debug("[SAMPLE] no strict sequence of rank %d found in %s", rank, interval.name)
    return beta
