"""Extension 0 → ℤ → G → |C|_p → 1 définie par le cocycle, et classification.

An element (k, x) of G = (ℤ × I)/∼ is stored with x ∈ [b, t); the product is
(n, x)·(m, y) = (n + m + c(x, y), x·y) and the order is lexicographic.
"""

import math
import random
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from src.core.dtos import AuditReportDTO
from src.core.exceptions import NotACyclicStructureError
from src.core.groups.ordered_group import OrderedGroup, audit_ordered_group
from src.core.intervals.structures import CyclicStructure, cyclic_audit
from src.core.realization.circle import (
    CirclePoint,
    circle_identity,
    circle_inverse,
    circle_mul,
    circle_point,
    cocycle,
    is_base,
    sample_circle_point,
)
from src.core.sampling import make_rng
from src.utils.config import (
    CLASSIFY_STRUCTURE_NMAX,
    CLASSIFY_STRUCTURE_SAMPLES,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    SAMPLE_INTEGER_SPAN,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ExtensionElement:
    """Couple (k, x) avec k ∈ ℤ et x un point du cercle."""

    k: int
    x: CirclePoint

    def __str__(self) -> str:
        """Textual form ``(k, x)``."""
        return f"({self.k}, {self.x})"


def extension_mul(a: ExtensionElement, b: ExtensionElement, cs: CyclicStructure) -> ExtensionElement:
    """(n, x)·(m, y) = (n + m + c(x, y), x·y)."""
    return ExtensionElement(a.k + b.k + cocycle(a.x, b.x, cs), circle_mul(a.x, b.x, cs))


def extension_inverse(a: ExtensionElement, cs: CyclicStructure) -> ExtensionElement:
    """(−n−1, x⁻¹), or (−n, b) on the image of ℤ."""
    if is_base(a.x):
        return ExtensionElement(-a.k, a.x)
    return ExtensionElement(-a.k - 1, circle_inverse(a.x, cs))


def extension_compare(a: ExtensionElement, b: ExtensionElement) -> int:
    """Lexicographic order on (k, x)."""
    if a.k != b.k:
        return -1 if a.k < b.k else 1
    return a.x.interval.compare(a.x.value, b.x.value)


def p_order_compare(a: ExtensionElement, b: ExtensionElement, cs: CyclicStructure) -> int:
    """Order from the cone P = {(n, x) : n ≥ 0}: a ≤ b iff a⁻¹b ∈ P."""
    if a == b:
        return 0
    return -1 if extension_mul(extension_inverse(a, cs), b, cs).k >= 0 else 1


def c_image(n: int, cs: CyclicStructure) -> ExtensionElement:
    """c(n) = (n, b)."""
    return ExtensionElement(n, circle_identity(cs))


class ExtensionGroup(OrderedGroup):
    """Groupe ordonné à gauche construit à partir d'une structure cyclique sur p_I."""

    def __init__(self, cs: CyclicStructure) -> None:
        """Bind the group to ``cs``.

        Args:
            cs: Cyclic structure whose rotations define the law

        """
        self.cs = cs

    @property
    def name(self) -> str:
        """Return ``extension:<interval>``."""
        return f"extension:{self.cs.interval.name}"

    @property
    def identity(self) -> ExtensionElement:
        """(0, b)."""
        return c_image(0, self.cs)

    @property
    def z(self) -> ExtensionElement:
        """c(1) = (1, b)."""
        return c_image(1, self.cs)

    def mul(self, a: ExtensionElement, b: ExtensionElement) -> ExtensionElement:
        """Extension product."""
        return extension_mul(a, b, self.cs)

    def inverse(self, a: ExtensionElement) -> ExtensionElement:
        """Extension inverse."""
        return extension_inverse(a, self.cs)

    def compare(self, a: ExtensionElement, b: ExtensionElement) -> int:
        """Lexicographic order."""
        return extension_compare(a, b)

    def contains(self, x: Any) -> bool:
        """True for extension elements over the same interval."""
        return isinstance(x, ExtensionElement) and x.x.interval == self.cs.interval

    def sample(self, rng: random.Random) -> ExtensionElement:
        """Random integer part and circle point."""
        k = rng.randint(-SAMPLE_INTEGER_SPAN, SAMPLE_INTEGER_SPAN)
        return ExtensionElement(k, sample_circle_point(self.cs, rng))

    def sample_unit(self, rng: random.Random) -> ExtensionElement:
        """Element (0, x) of [1, z)."""
        return ExtensionElement(0, sample_circle_point(self.cs, rng))

    def gprime_canonical(self, g: ExtensionElement) -> tuple[int, ExtensionElement]:
        """(k, x) = z^k (0, x)."""
        return g.k, ExtensionElement(0, g.x)

    def __repr__(self) -> str:
        """Textual form."""
        return f"<ExtensionGroup({self.cs.name})>"


def extension_audit(
    group: ExtensionGroup, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> AuditReportDTO:
    """Centrality of c(ℤ) and agreement of the lexicographic order with the P-order."""
    rng = make_rng(seed)
    cs = group.cs
    failures: list[str] = []
    for _ in range(samples):
        a, b = group.sample(rng), group.sample(rng)
        n = rng.randint(-SAMPLE_INTEGER_SPAN, SAMPLE_INTEGER_SPAN)
        shifted = ExtensionElement(n + a.k, a.x)
        if group.mul(c_image(n, cs), a) != shifted or group.mul(a, c_image(n, cs)) != shifted:
            failures.append(f"c({n}) is not central against {a}")
        if extension_compare(a, b) != p_order_compare(a, b, cs):
            failures.append(f"lexicographic and P-orders differ on {a}, {b}")
    if failures:
        logger.warning("[AUDIT] %s: %d failures", group.name, len(failures))
    return AuditReportDTO(name=f"extension:{cs.interval.name}", checked=samples, failures=tuple(failures))


def classification_audit(
    cs: CyclicStructure, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> tuple[ExtensionGroup, AuditReportDTO]:
    """Build the extension group of ``cs`` and audit it.

    Returns:
        The group and the merged report of the structure, ordered-group and extension audits

    """
    group = ExtensionGroup(cs)
    report = cyclic_audit(cs, CLASSIFY_STRUCTURE_NMAX, CLASSIFY_STRUCTURE_SAMPLES, seed)
    report = report.merge(audit_ordered_group(group, samples, seed))
    report = report.merge(extension_audit(group, samples, seed), name=f"classify:{cs.interval.name}")
    logger.info("[CLASSIFY] %s", report.summary())
    return group, report


def classify(cs: CyclicStructure, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> ExtensionGroup:
    """Left-ordered group corresponding to the cyclic structure ``cs``.

    Raises:
        NotACyclicStructureError: If any of the audits fails

    """
    group, report = classification_audit(cs, samples, seed)
    if not report.passed:
        raise NotACyclicStructureError(
            f"{cs.name} does not define a left-ordered group", details="; ".join(report.failures[:5])
        )
    return group


def from_gprime(group: OrderedGroup, cs: CyclicStructure, g: Any) -> ExtensionElement:
    """g = z^k v ↦ (k, v)."""
    k, v = group.gprime_canonical(g)
    return ExtensionElement(k, circle_point(cs.interval, v))


def finite_extension_isomorphism(n: int) -> tuple[Callable[[ExtensionElement], int], Callable[[int], tuple[int, int]]]:
    """(k, u) ↦ k(n+1) + u and its inverse by Euclidean division."""
    return (lambda e: e.k * (n + 1) + e.x.value), (lambda m: divmod(m, n + 1))


def rational_extension_isomorphism() -> tuple[
    Callable[[ExtensionElement], Fraction], Callable[[Fraction], tuple[int, Fraction]]
]:
    """(k, u) ↦ k + u and its inverse by integer part."""

    def backward(q: Fraction) -> tuple[int, Fraction]:
        k = math.floor(q)
        return k, Fraction(q) - k

    return (lambda e: e.k + e.x.value), backward


def model_isomorphism_audit(
    model: OrderedGroup,
    cs: CyclicStructure,
    group: ExtensionGroup,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> AuditReportDTO:
    """Check that g ↦ (k, v), g = z^k v, preserves products and the order on sampled pairs."""
    rng = make_rng(seed)
    failures: list[str] = []
    for _ in range(samples):
        g, h = model.sample(rng), model.sample(rng)
        eg, eh = from_gprime(model, cs, g), from_gprime(model, cs, h)
        if from_gprime(model, cs, model.mul(g, h)) != group.mul(eg, eh):
            failures.append(f"product not preserved on {g!r}, {h!r}")
        if model.compare(g, h) != group.compare(eg, eh):
            failures.append(f"order not preserved on {g!r}, {h!r}")
    if failures:
        logger.warning("[AUDIT] %s ≅ %s: %d failures", model.name, group.name, len(failures))
    logger.info("[AUDIT] %s ≅ %s: %d sampled pairs", model.name, group.name, samples)
    return AuditReportDTO(name=f"isomorphism:{model.name}", checked=samples, failures=tuple(failures))
