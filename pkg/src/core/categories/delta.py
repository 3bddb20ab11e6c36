"""Catégorie simpliciale Δ: applications croissantes [n] → [m], générateurs et relations.

Convention de composition: ``delta_compose(f, g)`` applique ``f`` puis ``g``.
Les mots de générateurs (``RelationInstance.lhs`` / ``rhs``) sont stockés dans
l'ordre d'écriture: le mot ``(g_1, g_2)`` désigne ``g_1∘g_2`` et ``g_2`` agit en premier.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Any

from src.core.dtos import AuditReportDTO
from src.core.exceptions import CompositionError, IndexRangeError, InvalidMorphismError
from src.utils.logger import get_logger

logger = get_logger(__name__)

SIGMA = "sigma"
DELTA = "delta"


@dataclass(frozen=True)
class DeltaMap:
    """Application croissante [n] → [m]."""

    source_rank: int
    target_rank: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate ranks, range and monotonicity."""
        object.__setattr__(self, "values", tuple(self.values))
        if self.source_rank < 0 or self.target_rank < 0:
            raise InvalidMorphismError(f"Ranks must be non-negative: [{self.source_rank}] → [{self.target_rank}]")
        if len(self.values) != self.source_rank + 1:
            raise InvalidMorphismError(
                f"Expected {self.source_rank + 1} values, got {len(self.values)}", details=str(self.values)
            )
        if any(v < 0 or v > self.target_rank for v in self.values):
            raise InvalidMorphismError(f"Values {list(self.values)} leave [0, {self.target_rank}]")
        if any(a > b for a, b in zip(self.values, self.values[1:], strict=False)):
            raise InvalidMorphismError(f"Values {list(self.values)} are not non-decreasing")

    def __call__(self, i: int) -> int:
        """Evaluate the map at ``i``."""
        return self.values[i]


@dataclass(frozen=True)
class IntervalMap:
    """Application croissante n* → m* qui préserve les extrémités.

    ``values`` liste w_0..w_{n+1} avec w_0 = 0 et w_{n+1} = m+1.
    """

    source_rank: int
    target_rank: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate endpoints and monotonicity."""
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.source_rank + 2:
            raise InvalidMorphismError(f"Expected {self.source_rank + 2} values, got {len(self.values)}")
        if self.values[0] != 0 or self.values[-1] != self.target_rank + 1:
            raise InvalidMorphismError(f"Interval map must fix the endpoints 0 and {self.target_rank + 1}")
        if any(a > b for a, b in zip(self.values, self.values[1:], strict=False)):
            raise InvalidMorphismError(f"Values {list(self.values)} are not non-decreasing")

    def __call__(self, i: int) -> int:
        """Evaluate the map at ``i``."""
        return self.values[i]


@dataclass(frozen=True)
class RelationInstance:
    """Instance d'une relation de définition, sous forme de deux mots de générateurs.

    Attributes:
        name: Label used in audit reports
        source: Rank of the source object of both sides
        target: Rank of the target object of both sides
        lhs: Left word, written order
        rhs: Right word, written order (empty word is the identity)

    """

    name: str
    source: int
    target: int
    lhs: tuple[Any, ...]
    rhs: tuple[Any, ...]


def identity(n: int) -> DeltaMap:
    """Return id_[n]."""
    return DeltaMap(n, n, tuple(range(n + 1)))


def generator(kind: str, j: int, n: int) -> DeltaMap:
    """Build a degeneracy σ_j: [n+1] → [n] or a face δ_j: [n−1] → [n].

    Args:
        kind: "sigma" ou "delta"
        j: Index of the generator, in [0, n]
        n: Rank fixing the generator (target for both kinds)

    Returns:
        The generator as a DeltaMap

    Raises:
        IndexRangeError: If the index or rank is out of range

    """
    if kind == SIGMA:
        if n < 0 or not 0 <= j <= n:
            raise IndexRangeError(f"σ_{j} needs 0 ≤ j ≤ n, got n={n}")
        return DeltaMap(n + 1, n, tuple(i if i <= j else i - 1 for i in range(n + 2)))
    if kind == DELTA:
        if n < 1 or not 0 <= j <= n:
            raise IndexRangeError(f"δ_{j} needs n ≥ 1 and 0 ≤ j ≤ n, got n={n}")
        return DeltaMap(n - 1, n, tuple(i if i < j else i + 1 for i in range(n)))
    raise IndexRangeError(f"Unknown generator kind: {kind!r}")


def sigma(j: int, n: int) -> DeltaMap:
    """Degeneracy σ_j: [n+1] → [n]."""
    return generator(SIGMA, j, n)


def delta(j: int, n: int) -> DeltaMap:
    """Face δ_j: [n−1] → [n]."""
    return generator(DELTA, j, n)


def delta_compose(f: DeltaMap, g: DeltaMap) -> DeltaMap:
    """Apply ``f`` then ``g``.

    Raises:
        CompositionError: If ``f`` does not land where ``g`` starts

    """
    if f.target_rank != g.source_rank:
        raise CompositionError(f"Cannot compose [{f.source_rank}]→[{f.target_rank}] with [{g.source_rank}]→[…]")
    return DeltaMap(f.source_rank, g.target_rank, tuple(g.values[v] for v in f.values))


def enumerate_delta_hom(n: int, m: int) -> list[DeltaMap]:
    """List Hom_Δ([n], [m]) in lexicographic order of value lists."""
    return [DeltaMap(n, m, values) for values in combinations_with_replacement(range(m + 1), n + 1)]


def epi_mono_factor(f: DeltaMap) -> tuple[list[int], list[int]]:
    """Return the normal form f = δ_{i_1}∘…∘δ_{i_s}∘σ_{j_1}∘…∘σ_{j_t}.

    Both index lists are in written order: delta indices strictly decreasing
    (the missed values of f), sigma indices strictly increasing (the positions
    where f repeats a value). See ``recompose`` for the inverse.
    """
    sigma_indices = [i for i in range(f.source_rank) if f.values[i] == f.values[i + 1]]
    image = set(f.values)
    delta_indices = [y for y in range(f.target_rank, -1, -1) if y not in image]
    return delta_indices, sigma_indices


def recompose(delta_indices: Sequence[int], sigma_indices: Sequence[int], source_rank: int) -> DeltaMap:
    """Rebuild a DeltaMap from its normal form (inverse of ``epi_mono_factor``)."""
    result = identity(source_rank)
    for j in reversed(sigma_indices):
        result = delta_compose(result, sigma(j, result.target_rank - 1))
    for i in reversed(delta_indices):
        result = delta_compose(result, delta(i, result.target_rank + 1))
    return result


def interval_identity(n: int) -> IntervalMap:
    """Return id_{n*}."""
    return IntervalMap(n, n, tuple(range(n + 2)))


def interval_compose(f: IntervalMap, g: IntervalMap) -> IntervalMap:
    """Apply ``f`` then ``g``."""
    if f.target_rank != g.source_rank:
        raise CompositionError(f"Cannot compose {f.source_rank}*→{f.target_rank}* with {g.source_rank}*→…")
    return IntervalMap(f.source_rank, g.target_rank, tuple(g.values[v] for v in f.values))


def delta_dual(f: DeltaMap) -> IntervalMap:
    """Dual interval map m* → n* of f: [n] → [m].

    g(y) = min{x ∈ [0, n] : f(x) ≥ y}, with g(0) = 0 and g(m+1) = n+1.
    """
    n, m = f.source_rank, f.target_rank
    values = [0]
    for y in range(1, m + 1):
        values.append(next((x for x in range(n + 1) if f.values[x] >= y), n + 1))
    values.append(n + 1)
    return IntervalMap(m, n, tuple(values))


def interval_dual(g: IntervalMap) -> DeltaMap:
    """Inverse of ``delta_dual``: f(x) = max{y ∈ [0, m] : g(y) ≤ x}."""
    n, m = g.target_rank, g.source_rank
    values = tuple(max(y for y in range(m + 1) if g.values[y] <= x) for x in range(n + 1))
    return DeltaMap(n, m, values)


def word_to_delta(word: Sequence[DeltaMap], source: int) -> DeltaMap:
    """Compose a written-order word; the empty word is id_[source]."""
    result = identity(source)
    for g in reversed(word):
        result = delta_compose(result, g)
    return result


def simplicial_relation_instances(n_max: int) -> list[RelationInstance]:
    """Every instance of the cosimplicial identities whose objects have rank ≤ n_max."""
    instances: list[RelationInstance] = []

    # σ_j σ_i = σ_i σ_{j+1}, i ≤ j, on [n+2] → [n]
    for n in range(n_max - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                instances.append(
                    RelationInstance(
                        f"s{j}s{i}=s{i}s{j + 1} on [{n + 2}]",
                        n + 2,
                        n,
                        (sigma(j, n), sigma(i, n + 1)),
                        (sigma(i, n), sigma(j + 1, n + 1)),
                    )
                )

    # δ_j δ_i = δ_i δ_{j−1}, i < j, on [n−1] → [n+1]
    for n in range(1, n_max):
        for j in range(1, n + 2):
            for i in range(j):
                instances.append(
                    RelationInstance(
                        f"d{j}d{i}=d{i}d{j - 1} on [{n - 1}]",
                        n - 1,
                        n + 1,
                        (delta(j, n + 1), delta(i, n)),
                        (delta(i, n + 1), delta(j - 1, n)),
                    )
                )

    # σ_j δ_i on [n] → [n]
    for n in range(n_max):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = (sigma(j, n), delta(i, n + 1))
                if i < j:
                    rhs: tuple[DeltaMap, ...] = (delta(i, n), sigma(j - 1, n - 1))
                elif i in (j, j + 1):
                    rhs = ()
                else:
                    rhs = (delta(i - 1, n), sigma(j, n - 1))
                instances.append(RelationInstance(f"s{j}d{i} on [{n}]", n, n, lhs, rhs))

    return instances


def delta_relation_audit(n_max: int) -> AuditReportDTO:
    """Check every simplicial relation instance with ranks ≤ n_max.

    Raises:
        IndexRangeError: If n_max < 1

    """
    if n_max < 1:
        raise IndexRangeError(f"n_max must be at least 1, got {n_max}")

    failures = []
    instances = simplicial_relation_instances(n_max)
    for instance in instances:
        left = word_to_delta(instance.lhs, instance.source)
        right = word_to_delta(instance.rhs, instance.source)
        if left != right:
            failures.append(f"{instance.name}: {list(left.values)} != {list(right.values)}")

    logger.info("[AUDIT] Δ relations up to rank %d: %d instances, %d failures", n_max, len(instances), len(failures))
    return AuditReportDTO(name="delta-relations", checked=len(instances), failures=tuple(failures))
