"""Catégorie cyclique Λ: classes d'applications monotones périodiques ℤ → ℤ.

Un morphisme [n] → [m] est une f croissante avec f(x + n + 1) = f(x) + m + 1,
à l'ajout d'un multiple de m + 1 près. ``LambdaMap`` garde le représentant avec
f(0) ∈ [0, m] et ne stocke qu'une période.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations_with_replacement

from src.core.categories.delta import (
    DeltaMap,
    IntervalMap,
    RelationInstance,
    delta,
    identity,
    sigma,
)
from src.core.dtos import AuditReportDTO
from src.core.exceptions import (
    CompositionError,
    IndexRangeError,
    InvalidMorphismError,
    NotAnAutomorphismError,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class LambdaMap:
    """Représentant canonique d'un morphisme [n] → [m] de Λ."""

    source_rank: int
    target_rank: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate canonicity and monotonicity within one period."""
        object.__setattr__(self, "values", tuple(self.values))
        n, m = self.source_rank, self.target_rank
        if n < 0 or m < 0:
            raise InvalidMorphismError(f"Ranks must be non-negative: [{n}] → [{m}]")
        if len(self.values) != n + 1:
            raise InvalidMorphismError(f"Expected {n + 1} values, got {len(self.values)}")
        if not 0 <= self.values[0] <= m:
            raise InvalidMorphismError(f"Canonical form needs f(0) ∈ [0, {m}], got {self.values[0]}")
        _check_periodic_monotone(self.values, m)

    def __call__(self, x: int) -> int:
        """Evaluate the periodic extension at ``x``."""
        return lambda_eval(self, x)


@dataclass(frozen=True)
class FinMap:
    """Application quelconque entre ensembles finis {0..s−1} → {0..t−1}."""

    source_size: int
    target_size: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate size and range."""
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.source_size:
            raise InvalidMorphismError(f"Expected {self.source_size} values, got {len(self.values)}")
        if any(v < 0 or v >= self.target_size for v in self.values):
            raise InvalidMorphismError(f"Values {list(self.values)} leave [0, {self.target_size})")


def _check_periodic_monotone(values: Sequence[int], m: int) -> None:
    if any(a > b for a, b in zip(values, values[1:], strict=False)):
        raise InvalidMorphismError(f"Values {list(values)} are not non-decreasing")
    if values[-1] > values[0] + m + 1:
        raise InvalidMorphismError(f"Values {list(values)} rise by more than {m + 1} within one period")


def lambda_eval(f: LambdaMap, x: int) -> int:
    """Value of the periodic extension of ``f`` at any integer ``x``."""
    q, r = divmod(x, f.source_rank + 1)
    return f.values[r] + q * (f.target_rank + 1)


def lambda_canonical(raw_values: Sequence[int], n: int, m: int) -> LambdaMap:
    """Shift a raw period by a multiple of m+1 so that f(0) ∈ [0, m].

    Raises:
        InvalidMorphismError: If the raw values are not a valid period

    """
    raw = tuple(raw_values)
    if len(raw) != n + 1:
        raise InvalidMorphismError(f"Expected {n + 1} raw values, got {len(raw)}")
    _check_periodic_monotone(raw, m)
    shift = raw[0] // (m + 1)
    return LambdaMap(n, m, tuple(v - shift * (m + 1) for v in raw))


def lambda_identity(n: int) -> LambdaMap:
    """Return id_[n] in Λ."""
    return LambdaMap(n, n, tuple(range(n + 1)))


def lambda_compose(f: LambdaMap, g: LambdaMap) -> LambdaMap:
    """Apply ``f`` then ``g``."""
    if f.target_rank != g.source_rank:
        raise CompositionError(f"Cannot compose [{f.source_rank}]→[{f.target_rank}] with [{g.source_rank}]→[…]")
    raw = [lambda_eval(g, lambda_eval(f, x)) for x in range(f.source_rank + 1)]
    return lambda_canonical(raw, f.source_rank, g.target_rank)


def fin_identity(size: int) -> FinMap:
    """Identity of {0..size−1}."""
    return FinMap(size, size, tuple(range(size)))


def fin_compose(f: FinMap, g: FinMap) -> FinMap:
    """Apply ``f`` then ``g``."""
    if f.target_size != g.source_size:
        raise CompositionError(f"Cannot compose maps of sizes {f.source_size}→{f.target_size} and {g.source_size}")
    return FinMap(f.source_size, g.target_size, tuple(g.values[v] for v in f.values))


def mu(f: LambdaMap) -> FinMap:
    """Reduce one period of ``f`` modulo m+1."""
    size = f.target_rank + 1
    return FinMap(f.source_rank + 1, size, tuple(v % size for v in f.values))


def embed_j(f: DeltaMap) -> LambdaMap:
    """Inclusion Δ → Λ: the periodic extension of ``f``."""
    return LambdaMap(f.source_rank, f.target_rank, f.values)


def tau_power(n: int, a: int) -> LambdaMap:
    """Class of x ↦ x − a in Aut_Λ([n]); any integer ``a`` is accepted."""
    return lambda_canonical([x - a for x in range(n + 1)], n, n)


def tau(n: int) -> LambdaMap:
    """Cyclic rotation τ_n, the class of x ↦ x − 1."""
    if n < 0:
        raise IndexRangeError(f"τ_n needs n ≥ 0, got {n}")
    return tau_power(n, 1)


def delta_lambda_decompose(f: LambdaMap) -> tuple[DeltaMap, int]:
    """Write f = j(h)∘τ^a (τ^a acts first) with a ∈ [0, n].

    Returns:
        The pair (h, a); it is unique

    """
    n, m = f.source_rank, f.target_rank
    for a in range(n + 1):
        vals = [lambda_eval(f, y + a) for y in range(n + 1)]
        shift = vals[0] // (m + 1)
        vals = [v - shift * (m + 1) for v in vals]
        if vals[-1] <= m:
            return DeltaMap(n, m, tuple(vals)), a
    raise InvalidMorphismError(f"No decomposition found for {list(f.values)}")


def is_automorphism(f: LambdaMap) -> bool:
    """True when ``f`` is invertible, i.e. its decomposition has h = id."""
    if f.source_rank != f.target_rank:
        return False
    h, _ = delta_lambda_decompose(f)
    return h == identity(f.source_rank)


def rotation_exponent(gamma: LambdaMap) -> int:
    """Return a ∈ [0, n] with γ = τ_n^a.

    Raises:
        NotAnAutomorphismError: If ``gamma`` is not invertible

    """
    h, a = delta_lambda_decompose(gamma)
    if gamma.source_rank != gamma.target_rank or h != identity(gamma.source_rank):
        raise NotAnAutomorphismError(f"{list(gamma.values)} is not an automorphism of [{gamma.source_rank}]")
    return a


def crossed_decompose(gamma: LambdaMap, phi: DeltaMap) -> tuple[DeltaMap, LambdaMap]:
    """Move an automorphism past a simplicial map: γ∘φ = γ_*(φ)∘φ^*(γ).

    Args:
        gamma: Automorphism of [n]
        phi: Map [m] → [n] of Δ

    Returns:
        (γ_*(φ) in Δ, φ^*(γ) automorphism of [m])

    Raises:
        NotAnAutomorphismError: If ``gamma`` is not invertible
        CompositionError: If ``phi`` does not land in [n]

    """
    if not is_automorphism(gamma):
        raise NotAnAutomorphismError(f"{list(gamma.values)} is not an automorphism of [{gamma.source_rank}]")
    if phi.target_rank != gamma.source_rank:
        raise CompositionError(f"φ lands in [{phi.target_rank}], γ acts on [{gamma.source_rank}]")
    h, a = delta_lambda_decompose(lambda_compose(embed_j(phi), gamma))
    return h, tau_power(phi.source_rank, a)


def lambda_transpose(f: LambdaMap) -> LambdaMap:
    """Transpose f^t: [m] → [n] with f(x) ≥ y ⟺ x ≥ f^t(y)."""
    n, m = f.source_rank, f.target_rank
    raw = [next(x for x in range(-n, n + 2) if lambda_eval(f, x) >= y) for y in range(m + 1)]
    return lambda_canonical(raw, m, n)


def preimage(f: LambdaMap, y: int) -> tuple[int, ...]:
    """Sorted integers x with f(x) ∈ [y, y + m]."""
    n, m = f.source_rank, f.target_rank
    anchor = (y // (m + 1)) * (n + 1)
    window = range(anchor - (n + 1), anchor + 2 * (n + 1) + 1)
    return tuple(x for x in window if y <= lambda_eval(f, x) <= y + m)


def preimage_interval(f: LambdaMap, y: int) -> tuple[int, int]:
    """Return (start, end) with f^{-1}([y, y+m]) = [start, end] and end − start = n.

    Raises:
        InvalidMorphismError: If the preimage is not such an interval

    """
    xs = preimage(f, y)
    start, end = xs[0], xs[-1]
    if xs != tuple(range(start, end + 1)) or end - start != f.source_rank:
        raise InvalidMorphismError(f"Preimage of [{y}, {y + f.target_rank}] is {list(xs)}")
    return start, end


def underline(phi: IntervalMap) -> LambdaMap:
    """Functor Δ^op → Λ: the periodic map agreeing with φ on 0..n+1."""
    return LambdaMap(phi.source_rank, phi.target_rank, phi.values[:-1])


def in_delta_image(f: LambdaMap) -> bool:
    """True when ``f`` is j(h) for some h in Δ."""
    return f.values[-1] <= f.target_rank


def in_dual_image(f: LambdaMap) -> bool:
    """True when ``f`` is the underline of some interval map."""
    return f.values[0] == 0


def enumerate_lambda_hom(n: int, m: int) -> list[LambdaMap]:
    """All canonical representatives of Hom_Λ([n], [m])."""
    maps = []
    for start in range(m + 1):
        for rest in combinations_with_replacement(range(start, start + m + 2), n):
            maps.append(LambdaMap(n, m, (start, *rest)))
    return maps


def word_to_lambda(word: Sequence[LambdaMap], source: int) -> LambdaMap:
    """Compose a written-order word of Λ; the empty word is id_[source]."""
    result = lambda_identity(source)
    for g in reversed(word):
        result = lambda_compose(result, g)
    return result


def presentation_instances(n_max: int) -> list[RelationInstance]:
    """Relations added by Λ over Δ, objects of rank ≤ n_max."""
    instances: list[RelationInstance] = []

    for n in range(n_max + 1):
        instances.append(RelationInstance(f"t{n}^{n + 1}=id", n, n, (tau(n),) * (n + 1), ()))

    # τ_n σ_0 = σ_n τ_{n+1}^2 ; τ_n σ_j = σ_{j−1} τ_{n+1}
    for n in range(n_max):
        instances.append(
            RelationInstance(
                f"t{n}s0=s{n}t{n + 1}^2",
                n + 1,
                n,
                (tau(n), embed_j(sigma(0, n))),
                (embed_j(sigma(n, n)), tau(n + 1), tau(n + 1)),
            )
        )
        for j in range(1, n + 1):
            instances.append(
                RelationInstance(
                    f"t{n}s{j}=s{j - 1}t{n + 1}",
                    n + 1,
                    n,
                    (tau(n), embed_j(sigma(j, n))),
                    (embed_j(sigma(j - 1, n)), tau(n + 1)),
                )
            )

    # τ_n δ_0 = δ_n ; τ_n δ_j = δ_{j−1} τ_{n−1}
    for n in range(1, n_max + 1):
        instances.append(
            RelationInstance(f"t{n}d0=d{n}", n - 1, n, (tau(n), embed_j(delta(0, n))), (embed_j(delta(n, n)),))
        )
        for j in range(1, n + 1):
            instances.append(
                RelationInstance(
                    f"t{n}d{j}=d{j - 1}t{n - 1}",
                    n - 1,
                    n,
                    (tau(n), embed_j(delta(j, n))),
                    (embed_j(delta(j - 1, n)), tau(n - 1)),
                )
            )

    return instances


def lambda_presentation_audit(n_max: int) -> AuditReportDTO:
    """Check τ_n^{n+1} = id and both rotation/generator families for ranks ≤ n_max.

    Raises:
        IndexRangeError: If n_max < 1

    """
    if n_max < 1:
        raise IndexRangeError(f"n_max must be at least 1, got {n_max}")

    failures = []
    instances = presentation_instances(n_max)
    for instance in instances:
        left = word_to_lambda(instance.lhs, instance.source)
        right = word_to_lambda(instance.rhs, instance.source)
        if left != right:
            failures.append(f"{instance.name}: {list(left.values)} != {list(right.values)}")

    logger.info(
        "[AUDIT] Λ presentation up to rank %d: %d instances, %d failures", n_max, len(instances), len(failures)
    )
    return AuditReportDTO(name="lambda-presentation", checked=len(instances), failures=tuple(failures))
