"""Groupes totalement ordonnés à gauche munis d'un élément central z > 1."""

import math
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from src.core.dtos import AuditReportDTO
from src.core.exceptions import GroupMembershipError
from src.core.intervals.interval import FiniteInterval, GroupInterval, Interval, RationalUnit
from src.core.sampling import make_rng, random_fraction
from src.utils.config import DEFAULT_SAMPLES, DEFAULT_SEED, GPRIME_SEARCH_LIMIT, SAMPLE_INTEGER_SPAN
from src.utils.logger import get_logger

logger = get_logger(__name__)


class OrderedGroup(ABC):
    """Groupe ordonné à gauche (G, P) avec un élément central z ∈ P, z ≠ 1.

    Les éléments sont des valeurs hashables; l'égalité est celle de Python.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Model identifier, e.g. ``finite:2``."""

    @property
    @abstractmethod
    def identity(self) -> Any:
        """Neutral element."""

    @property
    @abstractmethod
    def z(self) -> Any:
        """Central element z > 1."""

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any:
        """Product ab."""

    @abstractmethod
    def inverse(self, a: Any) -> Any:
        """Inverse a⁻¹."""

    @abstractmethod
    def compare(self, a: Any, b: Any) -> int:
        """Return -1, 0 or 1 as a <, =, > b."""

    @abstractmethod
    def contains(self, x: Any) -> bool:
        """True when ``x`` is an element of the model."""

    @abstractmethod
    def sample(self, rng: random.Random) -> Any:
        """Draw an element of G′."""

    def sample_unit(self, rng: random.Random) -> Any:
        """Draw an element of [1, z)."""
        return self.gprime_canonical(self.sample(rng))[1]

    def unit_interval(self) -> Interval:
        """Interval [1, z]."""
        return GroupInterval(self)

    def le(self, a: Any, b: Any) -> bool:
        """a ≤ b."""
        return self.compare(a, b) <= 0

    def lt(self, a: Any, b: Any) -> bool:
        """a < b."""
        return self.compare(a, b) < 0

    def is_positive(self, g: Any) -> bool:
        """g ∈ P, i.e. g ≥ 1."""
        return self.compare(self.identity, g) <= 0

    def power(self, g: Any, k: int) -> Any:
        """g^k for any integer k."""
        base = g if k >= 0 else self.inverse(g)
        result = self.identity
        for _ in range(abs(k)):
            result = self.mul(result, base)
        return result

    def product(self, *elements: Any) -> Any:
        """g_0 g_1 ⋯ g_n (identity for no factor)."""
        result = self.identity
        for g in elements:
            result = self.mul(result, g)
        return result

    def gprime_canonical(self, g: Any) -> tuple[int, Any]:
        """Write g = z^k v with v ∈ [1, z), stepping by z from g.

        Raises:
            GroupMembershipError: If no k with |k| ≤ GPRIME_SEARCH_LIMIT works

        """
        z, z_inv = self.z, self.inverse(self.z)
        k, v = 0, g
        for _ in range(GPRIME_SEARCH_LIMIT):
            if self.le(z, v):
                v, k = self.mul(z_inv, v), k + 1
            elif self.lt(v, self.identity):
                v, k = self.mul(z, v), k - 1
            else:
                return k, v
        raise GroupMembershipError(f"{g!r} is not in G′ within {GPRIME_SEARCH_LIMIT} steps of z")


def gprime_canonical(group: OrderedGroup, g: Any) -> tuple[int, Any]:
    """Return (k, v) with g = z^k v and v ∈ [1, z)."""
    return group.gprime_canonical(g)


def _cmp(a: Any, b: Any) -> int:
    return (a > b) - (a < b)


@dataclass(frozen=True)
class IntegerGroup(OrderedGroup):
    """(ℤ, +) avec z = ``z``; son intervalle [0, z] est l'intervalle fini (z−1)*."""

    z_value: int = 1

    def __post_init__(self) -> None:
        """Require z > 0."""
        if self.z_value < 1:
            raise GroupMembershipError(f"z must be positive, got {self.z_value}")

    @property
    def name(self) -> str:
        """Return ``finite:<z−1>``."""
        return f"finite:{self.z_value - 1}"

    @property
    def identity(self) -> int:
        """Return 0."""
        return 0

    @property
    def z(self) -> int:
        """Return z."""
        return self.z_value

    def mul(self, a: int, b: int) -> int:
        """Addition."""
        return a + b

    def inverse(self, a: int) -> int:
        """Negation."""
        return -a

    def compare(self, a: int, b: int) -> int:
        """Integer order."""
        return _cmp(a, b)

    def contains(self, x: Any) -> bool:
        """True for integers."""
        return isinstance(x, int) and not isinstance(x, bool)

    def sample(self, rng: random.Random) -> int:
        """Uniform integer in a few periods around 0."""
        span = SAMPLE_INTEGER_SPAN * self.z_value
        return rng.randint(-span, span)

    def sample_unit(self, rng: random.Random) -> int:
        """Uniform element of [0, z)."""
        return rng.randrange(self.z_value)

    def unit_interval(self) -> Interval:
        """Finite interval (z−1)*."""
        return FiniteInterval(self.z_value - 1)

    def gprime_canonical(self, g: int) -> tuple[int, int]:
        """Euclidean division by z."""
        return divmod(g, self.z_value)


@dataclass(frozen=True)
class RationalGroup(OrderedGroup):
    """(ℚ, +) avec z = ``z_value`` (1 par défaut)."""

    z_value: Fraction = field(default=Fraction(1))

    def __post_init__(self) -> None:
        """Require z > 0."""
        object.__setattr__(self, "z_value", Fraction(self.z_value))
        if self.z_value <= 0:
            raise GroupMembershipError(f"z must be positive, got {self.z_value}")

    @property
    def name(self) -> str:
        """Return ``rational`` (or ``rational:<z>``)."""
        return "rational" if self.z_value == 1 else f"rational:{self.z_value}"

    @property
    def identity(self) -> Fraction:
        """Return 0."""
        return Fraction(0)

    @property
    def z(self) -> Fraction:
        """Return z."""
        return self.z_value

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        """Addition."""
        return a + b

    def inverse(self, a: Fraction) -> Fraction:
        """Negation."""
        return -a

    def compare(self, a: Fraction, b: Fraction) -> int:
        """Rational order."""
        return _cmp(a, b)

    def contains(self, x: Any) -> bool:
        """True for rationals."""
        return isinstance(x, Fraction | int) and not isinstance(x, bool)

    def sample(self, rng: random.Random) -> Fraction:
        """Rational with small denominator in a few periods around 0."""
        span = SAMPLE_INTEGER_SPAN * self.z_value
        return random_fraction(rng, -span, span)

    def unit_interval(self) -> Interval:
        """Rational unit interval when z = 1."""
        return RationalUnit() if self.z_value == 1 else GroupInterval(self)

    def gprime_canonical(self, g: Fraction) -> tuple[int, Fraction]:
        """Floor division by z."""
        k = math.floor(Fraction(g) / self.z_value)
        return k, Fraction(g) - k * self.z_value


def audit_ordered_group(
    group: OrderedGroup, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> AuditReportDTO:
    """Check the left-ordered group axioms and centrality of z on sampled triples.

    Args:
        group: Model to audit
        samples: Number of sampled triples
        seed: Seed of the sampler

    Returns:
        Report with one line per violated property and witness

    """
    rng = make_rng(seed)
    failures: list[str] = []
    one, z = group.identity, group.z

    def check(ok: bool, message: str) -> None:
        if not ok:
            failures.append(message)

    check(group.lt(one, z), "z > 1 fails")
    for _ in range(samples):
        a, b, c = group.sample(rng), group.sample(rng), group.sample(rng)
        ab = group.compare(a, b)
        check(ab == -group.compare(b, a), f"antisymmetry fails on {a!r}, {b!r}")
        check((ab == 0) == (a == b), f"totality/equality mismatch on {a!r}, {b!r}")
        if group.le(a, b) and group.le(b, c):
            check(group.le(a, c), f"transitivity fails on {a!r}, {b!r}, {c!r}")
        check(group.compare(group.mul(c, a), group.mul(c, b)) == ab, f"left invariance fails on {a!r}, {b!r}, {c!r}")
        check(group.mul(a, z) == group.mul(z, a), f"z is not central against {a!r}")
        check(
            group.mul(group.mul(a, b), c) == group.mul(a, group.mul(b, c)),
            f"associativity fails on {a!r}, {b!r}, {c!r}",
        )
        check(group.mul(a, group.inverse(a)) == one, f"inverse fails on {a!r}")
        check(group.mul(one, a) == a == group.mul(a, one), f"identity fails on {a!r}")

    if failures:
        logger.warning("[AUDIT] ordered group %s: %d failures", group.name, len(failures))
    logger.info("[AUDIT] ordered group %s: %d sampled triples", group.name, samples)
    return AuditReportDTO(name=f"ordered-group:{group.name}", checked=samples, failures=tuple(failures))
