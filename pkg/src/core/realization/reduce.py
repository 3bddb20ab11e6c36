"""Formes canoniques des points de la réalisation |S|_p = S ⊗_Δ p_I.

A point is a pair (x, β) with x a cell of level n and β ∈ F_I(n). The
relation (x·φ, t) ∼ (x, φ_*t) is oriented so that every pair rewrites to a
nondegenerate cell carrying a strictly increasing sequence.
"""

from collections.abc import Hashable
from dataclasses import dataclass, field

import networkx as nx

from src.core.categories.delta import DELTA, SIGMA
from src.core.cyclic_sets.finite_sets import Cell, FiniteSimplicialSet
from src.core.dtos import AuditReportDTO
from src.core.exceptions import CompositionError, InvalidSequenceError
from src.core.intervals.interval import Interval
from src.core.intervals.sequences import MonotoneSeq, monotone_sequences, seq_act_generator
from src.core.intervals.structures import describe_sequence
from src.utils.logger import get_logger

logger = get_logger(__name__)

NodeKey = tuple[int, Hashable, tuple]


@dataclass(frozen=True)
class RealizationPoint:
    """Couple (x, β) avec x ∈ S_n et β ∈ F_I(n)."""

    space: FiniteSimplicialSet = field(compare=False, repr=False)
    level: int
    cell: Cell
    sequence: MonotoneSeq

    def __post_init__(self) -> None:
        """Check that the cell and the sequence live on the same level."""
        self.space.check_level(self.level)
        if self.sequence.rank != self.level:
            raise CompositionError(f"Sequence of rank {self.sequence.rank} paired with a cell of level {self.level}")
        if self.cell not in self.space.levels[self.level]:
            raise InvalidSequenceError(f"{self.cell!r} is not a cell of level {self.level}")

    @property
    def key(self) -> NodeKey:
        """Hashable (level, cell, values) triple."""
        return self.level, self.cell, self.sequence.values

    def is_canonical(self) -> bool:
        """True for a nondegenerate cell with a strictly increasing sequence."""
        return self.sequence.is_strict() and not self.space.is_degenerate(self.cell, self.level)

    def __str__(self) -> str:
        """Short form ``(cell, (β_0, …, β_{n+1}))``."""
        return f"({self.cell!r}, {describe_sequence(self.sequence)})"


def realize_reduce(point: RealizationPoint) -> RealizationPoint:
    """Rewrite ``point`` to its canonical representative.

    A repeated value β_i = β_{i+1} is removed by passing to the face x·δ_i;
    a degenerate cell x = y·σ_j (smallest j) is replaced by y while β loses β_{j+1}.
    """
    s, n, x, beta = point.space, point.level, point.cell, point.sequence
    steps = 0
    while True:
        i = beta.first_repeat()
        if i is not None:
            x = s.face(x, n, i)
            beta = _drop_repeat(beta, i)
            n -= 1
            steps += 1
            continue
        sources = s.degenerate_sources(x, n)
        if sources:
            j, y = sources[0]
            x, beta, n = y, seq_act_generator(SIGMA, j, beta), n - 1
            steps += 1
            continue
        break
    logger.debug("[REDUCE] %s reduced in %d steps", point, steps)
    return RealizationPoint(s, n, x, beta)


def _drop_repeat(beta: MonotoneSeq, i: int) -> MonotoneSeq:
    """β′ with F(δ_i)(β′) = β when β_i = β_{i+1}."""
    return MonotoneSeq(beta.interval, beta.rank - 1, beta.values[: i + 1] + beta.values[i + 2 :])


def _all_points(s: FiniteSimplicialSet, interval: Interval) -> list[RealizationPoint]:
    return [
        RealizationPoint(s, n, x, beta)
        for n in range(s.truncation + 1)
        for beta in monotone_sequences(interval, n)
        for x in s.levels[n]
    ]


def equivalence_closure_partition(s: FiniteSimplicialSet, interval: Interval) -> set[frozenset[NodeKey]]:
    """Classes of the equivalence relation generated by (x·φ, t) ∼ (x, φ_*t) for generators φ.

    Every pair of levels ≤ N is enumerated, so ``interval`` must be finite.
    """
    graph = nx.Graph()
    for point in _all_points(s, interval):
        graph.add_node(point.key)
    for m in range(s.truncation + 1):
        for t in monotone_sequences(interval, m):
            # σ_j: [m] → [m−1] and δ_j: [m] → [m+1] both start at [m]
            if m >= 1:
                for j in range(m):
                    pushed = seq_act_generator(SIGMA, j, t)
                    for x in s.levels[m - 1]:
                        graph.add_edge((m, s.degeneracy(x, m - 1, j), t.values), (m - 1, x, pushed.values))
            if m < s.truncation:
                for j in range(m + 2):
                    pushed = seq_act_generator(DELTA, j, t)
                    for x in s.levels[m + 1]:
                        graph.add_edge((m, s.face(x, m + 1, j), t.values), (m + 1, x, pushed.values))
    partition = {frozenset(component) for component in nx.connected_components(graph)}
    logger.debug("[REDUCE] closure: %d points in %d classes", graph.number_of_nodes(), len(partition))
    return partition


def reduce_partition(s: FiniteSimplicialSet, interval: Interval) -> set[frozenset[NodeKey]]:
    """Classes of points sharing the same canonical form."""
    classes: dict[NodeKey, set[NodeKey]] = {}
    for point in _all_points(s, interval):
        classes.setdefault(realize_reduce(point).key, set()).add(point.key)
    return {frozenset(members) for members in classes.values()}


def canonical_form_audit(s: FiniteSimplicialSet, interval: Interval) -> AuditReportDTO:
    """Compare the canonical-form partition with the brute-force equivalence closure."""
    closure = equivalence_closure_partition(s, interval)
    reduced = reduce_partition(s, interval)
    failures = [f"closure class {sorted(map(str, c))} is not a canonical-form class" for c in closure - reduced]
    checked = sum(len(c) for c in closure)
    if failures:
        logger.warning("[AUDIT] canonical forms over %s: %d mismatched classes", interval.name, len(failures))
    logger.info("[AUDIT] canonical forms over %s: %d points, %d classes", interval.name, checked, len(closure))
    return AuditReportDTO(name=f"canonical-forms:{interval.name}", checked=checked, failures=tuple(failures))
