"""N-uplets F(n) d'un groupe ordonné et la structure cyclique associée sur [1, z]."""

from dataclasses import dataclass
from typing import Any

from src.core.exceptions import IndexRangeError, InvalidSequenceError
from src.core.groups.ordered_group import OrderedGroup
from src.core.intervals.interval import Interval
from src.core.intervals.sequences import MonotoneSeq
from src.core.intervals.structures import CyclicStructure
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class FTuple:
    """(g_0, …, g_n) avec chaque g_i ≥ 1 et g_0 g_1 ⋯ g_n = z."""

    group: OrderedGroup
    rank: int
    entries: tuple[Any, ...]

    def __post_init__(self) -> None:
        """Check positivity and the product condition."""
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != self.rank + 1:
            raise InvalidSequenceError(f"Rank {self.rank} needs {self.rank + 1} entries, got {len(self.entries)}")
        if not all(self.group.is_positive(g) for g in self.entries):
            raise InvalidSequenceError("F(n) entries must be ≥ 1")
        if self.group.product(*self.entries) != self.group.z:
            raise InvalidSequenceError("F(n) entries must multiply to z")


def pi_map(group: OrderedGroup, beta: MonotoneSeq) -> FTuple:
    """π(β)_j = β_j⁻¹ β_{j+1}."""
    values = beta.values
    entries = tuple(group.mul(group.inverse(values[j]), values[j + 1]) for j in range(beta.rank + 1))
    return FTuple(group, beta.rank, entries)


def pi_inverse(g: FTuple, interval: Interval | None = None) -> MonotoneSeq:
    """β_j = g_0 ⋯ g_{j−1}; β_0 = 1 and β_{n+1} = z."""
    group = g.group
    values = [group.identity]
    for entry in g.entries:
        values.append(group.mul(values[-1], entry))
    return MonotoneSeq(interval or group.unit_interval(), g.rank, tuple(values))


def ftuple_sigma(j: int, g: FTuple) -> FTuple:
    """F(σ_j): merge g_j and g_{j+1} into g_j g_{j+1}.

    Raises:
        IndexRangeError: If j is not in [0, n−1]

    """
    if not 0 <= j < g.rank:
        raise IndexRangeError(f"σ_{j} does not act on F({g.rank})")
    e = g.entries
    return FTuple(g.group, g.rank - 1, (*e[:j], g.group.mul(e[j], e[j + 1]), *e[j + 2 :]))


def ftuple_delta(j: int, g: FTuple) -> FTuple:
    """F(δ_j): insert the identity before g_j.

    Raises:
        IndexRangeError: If j is not in [0, n+1]

    """
    if not 0 <= j <= g.rank + 1:
        raise IndexRangeError(f"δ_{j} does not act on F({g.rank})")
    e = g.entries
    return FTuple(g.group, g.rank + 1, (*e[:j], g.group.identity, *e[j:]))


def ftuple_tau(g: FTuple) -> FTuple:
    """F(τ): (g_0, g_1, …, g_n) ↦ (g_1, …, g_n, g_0)."""
    return FTuple(g.group, g.rank, (*g.entries[1:], g.entries[0]))


def tau_direct(group: OrderedGroup, beta: MonotoneSeq) -> MonotoneSeq:
    """τ(β)_j = β_1⁻¹ β_{j+1} for j ≤ n, and τ(β)_{n+1} = z."""
    first_inv = group.inverse(beta.values[1])
    values = tuple(group.mul(first_inv, beta.values[j + 1]) for j in range(beta.rank + 1)) + (group.z,)
    return MonotoneSeq(beta.interval, beta.rank, values)


class GroupCyclicStructure(CyclicStructure):
    """Structure cyclique sur [1, z] obtenue en faisant tourner F(n)."""

    def __init__(self, group: OrderedGroup) -> None:
        """Bind the structure to ``group``.

        Args:
            group: Left-ordered group with central z

        """
        self.group = group
        self._interval = group.unit_interval()

    @property
    def interval(self) -> Interval:
        """Return [1, z]."""
        return self._interval

    @property
    def name(self) -> str:
        """Return ``group:<model>``."""
        return f"group:{self.group.name}"

    def tau_n(self, beta: MonotoneSeq) -> MonotoneSeq:
        """π⁻¹ ∘ F(τ) ∘ π."""
        return pi_inverse(ftuple_tau(pi_map(self.group, beta)), self._interval)

    def __repr__(self) -> str:
        """Textual form."""
        return f"<GroupCyclicStructure(group={self.group.name})>"


def make_cyclic_structure(group: OrderedGroup) -> GroupCyclicStructure:
    """Cyclic structure on the point p_[1,z] defined by ``group``."""
    logger.debug("[STRUCTURE] cyclic structure for %s", group.name)
    return GroupCyclicStructure(group)
