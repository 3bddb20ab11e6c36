"""Intervalles: ensembles totalement ordonnés avec plus petit et plus grand élément."""

import functools
import random
from abc import ABC, abstractmethod
from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from src.core.exceptions import InvalidSequenceError
from src.core.sampling import random_fraction

if TYPE_CHECKING:
    from src.core.groups.ordered_group import OrderedGroup


class Interval(ABC):
    """Ensemble totalement ordonné avec deux extrémités distinctes b < t.

    Les modèles concrets fournissent ``bottom``, ``top``, ``compare``, ``contains``
    et ``sample_element``; le reste de la bibliothèque passe par cette API.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Short identifier used in JSON payloads and logs."""

    @property
    @abstractmethod
    def bottom(self) -> Any:
        """Smallest element b."""

    @property
    @abstractmethod
    def top(self) -> Any:
        """Largest element t."""

    @abstractmethod
    def compare(self, a: Any, b: Any) -> int:
        """Return -1, 0 or 1 as a <, =, > b."""

    @abstractmethod
    def contains(self, x: Any) -> bool:
        """True when ``x`` lies in [b, t]."""

    @abstractmethod
    def sample_element(self, rng: random.Random) -> Any:
        """Draw an element of [b, t]."""

    @property
    def is_finite(self) -> bool:
        """True for intervals whose elements can be listed."""
        return False

    def elements(self) -> tuple[Any, ...]:
        """All elements in increasing order (finite intervals only)."""
        raise InvalidSequenceError(f"Interval {self.name} is not finite")

    def le(self, a: Any, b: Any) -> bool:
        """a ≤ b."""
        return self.compare(a, b) <= 0

    def lt(self, a: Any, b: Any) -> bool:
        """a < b."""
        return self.compare(a, b) < 0

    def sorted(self, values: Iterable[Any]) -> list[Any]:
        """Sort ``values`` for this order."""
        return sorted(values, key=functools.cmp_to_key(self.compare))


def _cmp(a: Any, b: Any) -> int:
    return (a > b) - (a < b)


@dataclass(frozen=True)
class FiniteInterval(Interval):
    """Intervalle n* = {0, 1, …, n+1}."""

    n: int

    def __post_init__(self) -> None:
        """Validate the rank."""
        if self.n < 0:
            raise InvalidSequenceError(f"Finite interval needs n ≥ 0, got {self.n}")

    @property
    def name(self) -> str:
        """Return ``finite:<n>``."""
        return f"finite:{self.n}"

    @property
    def bottom(self) -> int:
        """Return 0."""
        return 0

    @property
    def top(self) -> int:
        """Return n+1."""
        return self.n + 1

    def compare(self, a: int, b: int) -> int:
        """Integer order."""
        return _cmp(a, b)

    def contains(self, x: Any) -> bool:
        """True for integers in [0, n+1]."""
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x <= self.n + 1

    def sample_element(self, rng: random.Random) -> int:
        """Uniform element."""
        return rng.randint(0, self.n + 1)

    @property
    def is_finite(self) -> bool:
        """Return True."""
        return True

    def elements(self) -> tuple[int, ...]:
        """Return 0..n+1."""
        return tuple(range(self.n + 2))


@dataclass(frozen=True)
class RationalUnit(Interval):
    """Rationnels exacts de [0, 1]."""

    @property
    def name(self) -> str:
        """Return ``rational-unit``."""
        return "rational-unit"

    @property
    def bottom(self) -> Fraction:
        """Return 0."""
        return Fraction(0)

    @property
    def top(self) -> Fraction:
        """Return 1."""
        return Fraction(1)

    def compare(self, a: Fraction, b: Fraction) -> int:
        """Rational order."""
        return _cmp(a, b)

    def contains(self, x: Any) -> bool:
        """True for rationals in [0, 1]."""
        return isinstance(x, Fraction | int) and not isinstance(x, bool) and 0 <= x <= 1

    def sample_element(self, rng: random.Random) -> Fraction:
        """Rational with small denominator."""
        return random_fraction(rng, Fraction(0), Fraction(1))


@dataclass(frozen=True)
class GroupInterval(Interval):
    """Intervalle [1, z] d'un groupe ordonné à gauche."""

    group: "OrderedGroup"

    @property
    def name(self) -> str:
        """Return ``group:<model>``."""
        return f"group:{self.group.name}"

    @property
    def bottom(self) -> Any:
        """Group identity."""
        return self.group.identity

    @property
    def top(self) -> Any:
        """Central element z."""
        return self.group.z

    def compare(self, a: Any, b: Any) -> int:
        """Order of the group."""
        return self.group.compare(a, b)

    def contains(self, x: Any) -> bool:
        """True for group elements with 1 ≤ x ≤ z."""
        return self.group.contains(x) and self.le(self.bottom, x) and self.le(x, self.top)

    def sample_element(self, rng: random.Random) -> Any:
        """Element of [1, z), occasionally z itself."""
        if rng.randrange(16) == 0:
            return self.top
        return self.group.sample_unit(rng)


@dataclass(frozen=True)
class ChainInterval(Interval):
    """Chaîne finie explicite d'étiquettes, de la plus petite à la plus grande."""

    labels: tuple[Hashable, ...]

    def __post_init__(self) -> None:
        """Validate that the chain has two distinct endpoints."""
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) < 2 or len(set(self.labels)) != len(self.labels):
            raise InvalidSequenceError(f"A chain needs at least two distinct labels, got {list(self.labels)}")

    @functools.cached_property
    def _rank(self) -> dict[Hashable, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def name(self) -> str:
        """Return ``chain:<size>``."""
        return f"chain:{len(self.labels)}"

    @property
    def bottom(self) -> Hashable:
        """First label."""
        return self.labels[0]

    @property
    def top(self) -> Hashable:
        """Last label."""
        return self.labels[-1]

    def compare(self, a: Hashable, b: Hashable) -> int:
        """Position order."""
        return _cmp(self._rank[a], self._rank[b])

    def contains(self, x: Any) -> bool:
        """True for labels of the chain."""
        return x in self._rank

    def sample_element(self, rng: random.Random) -> Hashable:
        """Uniform label."""
        return rng.choice(self.labels)

    @property
    def is_finite(self) -> bool:
        """Return True."""
        return True

    def elements(self) -> tuple[Hashable, ...]:
        """Return the labels."""
        return self.labels

    def index(self, x: Hashable) -> int:
        """Position of ``x`` in the chain."""
        return self._rank[x]


def interval_from_name(name: str, labels: Sequence[Hashable] | None = None) -> Interval:
    """Rebuild a finite or rational interval from its ``name``.

    Raises:
        InvalidSequenceError: For unknown names

    """
    if name == "rational-unit":
        return RationalUnit()
    if name.startswith("finite:") and name[len("finite:") :].isdigit():
        return FiniteInterval(int(name[len("finite:") :]))
    if name.startswith("chain:") and labels is not None:
        return ChainInterval(tuple(labels))
    raise InvalidSequenceError(f"Unknown interval {name!r}")
