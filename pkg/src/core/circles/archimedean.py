"""Ensembles archimédiens (X, θ) de période finie et morphismes de la catégorie Arc.

X = (ℤ × F)/∼ for a fiber interval F, with (k+1, b) ∼ (k, t), the
lexicographic order and θ(k, f) = (k+1, f). When F is finite with p+1
elements, X is order isomorphic to ℤ with θ = +p; ``position`` and
``element_at`` realize that isomorphism and morphisms are stored on it.
"""

import random
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any

from src.core.categories.cyclic import LambdaMap, enumerate_lambda_hom, lambda_canonical
from src.core.dtos import AuditReportDTO
from src.core.exceptions import CompositionError, InvalidMorphismError, InvalidSequenceError
from src.core.intervals.interval import FiniteInterval, Interval
from src.core.sampling import make_rng
from src.utils.config import DEFAULT_SAMPLES, DEFAULT_SEED, SAMPLE_INTEGER_SPAN
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Borne de recherche de n dans la propriété archimédienne
ARCHIMEDEAN_SEARCH_LIMIT = 64


@dataclass(frozen=True)
class ArchElement:
    """Classe de (k, f) avec f ≠ t."""

    k: int
    f: Any

    def __str__(self) -> str:
        """Textual form ``(k, f)``."""
        return f"({self.k}, {self.f})"


@dataclass(frozen=True)
class ArchimedeanSet:
    """(ℤ × fibre)/∼ muni du décalage θ."""

    fiber: Interval

    @property
    def name(self) -> str:
        """Return ``arch:<fiber>``."""
        return f"arch:{self.fiber.name}"

    @property
    def period(self) -> int:
        """Number p of classes per θ-period (finite fibers only).

        Raises:
            InvalidSequenceError: For infinite fibers

        """
        return len(self.fiber.elements()) - 1

    def element(self, k: int, f: Any) -> ArchElement:
        """Normalized class of (k, f)."""
        if not self.fiber.contains(f):
            raise InvalidSequenceError(f"{f!r} is not in {self.fiber.name}")
        if self.fiber.compare(f, self.fiber.top) == 0:
            return ArchElement(k + 1, self.fiber.bottom)
        return ArchElement(k, f)

    def compare(self, x: ArchElement, y: ArchElement) -> int:
        """Lexicographic order."""
        if x.k != y.k:
            return -1 if x.k < y.k else 1
        return self.fiber.compare(x.f, y.f)

    def theta(self, x: ArchElement, times: int = 1) -> ArchElement:
        """θ^times(x)."""
        return ArchElement(x.k + times, x.f)

    def position(self, x: ArchElement) -> int:
        """Order isomorphism with ℤ for finite fibers."""
        return x.k * self.period + self.fiber.elements().index(x.f)

    def element_at(self, pos: int) -> ArchElement:
        """Inverse of ``position``."""
        k, r = divmod(pos, self.period)
        return ArchElement(k, self.fiber.elements()[r])

    def sample(self, rng: random.Random) -> ArchElement:
        """Random element a few periods around 0."""
        k = rng.randint(-SAMPLE_INTEGER_SPAN, SAMPLE_INTEGER_SPAN)
        return self.element(k, self.fiber.sample_element(rng))


def interval_to_arch(interval: Interval) -> ArchimedeanSet:
    """Archimedean set (ℤ × I)/∼ of an interval."""
    return ArchimedeanSet(interval)


def integer_arch(period: int) -> ArchimedeanSet:
    """ℤ with θ = +period, as the archimedean set of (period−1)*."""
    if period < 1:
        raise InvalidSequenceError(f"θ must translate by at least 1, got {period}")
    return ArchimedeanSet(FiniteInterval(period - 1))


def archimedean_audit(
    x_set: ArchimedeanSet, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> AuditReportDTO:
    """Check θ(x) > x, the archimedean property and order consistency on samples."""
    rng = make_rng(seed)
    failures: list[str] = []
    for _ in range(samples):
        x, y = x_set.sample(rng), x_set.sample(rng)
        if x_set.compare(x_set.theta(x), x) <= 0:
            failures.append(f"θ({x}) is not above {x}")
        if not any(x_set.compare(y, x_set.theta(x, n)) <= 0 for n in range(ARCHIMEDEAN_SEARCH_LIMIT)):
            failures.append(f"no θ^n({x}) above {y}")
        if x_set.compare(x, y) != -x_set.compare(y, x):
            failures.append(f"order is not antisymmetric on {x}, {y}")
    if failures:
        logger.warning("[AUDIT] %s: %d failures", x_set.name, len(failures))
    logger.info("[AUDIT] %s: %d sampled pairs", x_set.name, samples)
    return AuditReportDTO(name=x_set.name, checked=samples, failures=tuple(failures))


@dataclass(frozen=True)
class ArcMorphism:
    """Application croissante θ-équivariante entre ensembles archimédiens de période finie.

    ``values`` donne les positions f(0), …, f(p−1) dans le but; l'application vérifie
    f(x + p) = f(x) + q. Deux applications qui diffèrent d'un multiple de q sont le même
    morphisme; ``arc_canonical`` choisit le représentant avec f(0) ∈ [0, q).
    """

    source: ArchimedeanSet
    target: ArchimedeanSet
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        """Check length, monotonicity and equivariance."""
        object.__setattr__(self, "values", tuple(self.values))
        p, q = self.source.period, self.target.period
        if len(self.values) != p:
            raise InvalidMorphismError(f"Expected {p} values, got {len(self.values)}")
        extended = (*self.values, self.values[0] + q)
        if any(b < a for a, b in zip(extended, extended[1:], strict=False)):
            raise InvalidMorphismError(f"Not a monotone equivariant map: {list(self.values)}")

    def __call__(self, pos: int) -> int:
        """Image of a position."""
        return arc_eval(self, pos)


def arc_eval(f: ArcMorphism, pos: int) -> int:
    """f(pos) on positions."""
    k, r = divmod(pos, f.source.period)
    return f.values[r] + k * f.target.period


def arc_identity(x_set: ArchimedeanSet) -> ArcMorphism:
    """Identity of X."""
    return ArcMorphism(x_set, x_set, tuple(range(x_set.period)))


def arc_theta(x_set: ArchimedeanSet, times: int = 1) -> ArcMorphism:
    """θ^times as an underlying map (equal to the identity as a morphism)."""
    p = x_set.period
    return ArcMorphism(x_set, x_set, tuple(r + times * p for r in range(p)))


def arc_compose(f: ArcMorphism, g: ArcMorphism) -> ArcMorphism:
    """Apply f, then g.

    Raises:
        CompositionError: If the target of f is not the source of g

    """
    if f.target.period != g.source.period:
        raise CompositionError(f"{f.target.name} does not match {g.source.name}")
    return ArcMorphism(f.source, g.target, tuple(arc_eval(g, v) for v in f.values))


def arc_canonical(f: ArcMorphism) -> ArcMorphism:
    """Representative with f(0) ∈ [0, q)."""
    shift = (f.values[0] // f.target.period) * f.target.period
    return ArcMorphism(f.source, f.target, tuple(v - shift for v in f.values))


def arc_equal(f: ArcMorphism, g: ArcMorphism) -> bool:
    """Equality as morphisms of Arc."""
    return arc_canonical(f).values == arc_canonical(g).values


def enumerate_arc_hom(x_set: ArchimedeanSet, y_set: ArchimedeanSet) -> Iterator[ArcMorphism]:
    """All morphism classes X → Y, canonical representatives."""
    n, m = x_set.period - 1, y_set.period - 1
    for f in enumerate_lambda_hom(n, m):
        yield lambda_to_arc(f, x_set, y_set)


def arc_to_lambda(f: ArcMorphism) -> LambdaMap:
    """Morphism of Λ with the same periodic values."""
    return lambda_canonical(f.values, f.source.period - 1, f.target.period - 1)


def lambda_to_arc(
    f: LambdaMap, x_set: ArchimedeanSet | None = None, y_set: ArchimedeanSet | None = None
) -> ArcMorphism:
    """Morphism (ℤ, +n+1) → (ℤ, +m+1) with the values of ``f``."""
    source = x_set or integer_arch(f.source_rank + 1)
    target = y_set or integer_arch(f.target_rank + 1)
    return ArcMorphism(source, target, f.values)
