"""Ensembles simpliciaux et cycliques finis, tronqués au rang N.

Cells are opaque hashable labels. The contravariant actions are stored as
explicit tables:

- ``degeneracies[(n, j)]``: S_n → S_{n+1}, the action of σ_j: [n+1] → [n]
- ``faces[(n, j)]``: S_n → S_{n−1}, the action of δ_j: [n−1] → [n] (n ≥ 1)
- ``rotations[n]``: S_n → S_n, the action of τ_n (cyclic sets only)

Actions are written on the right: x·(g_1∘g_2) = (x·g_1)·g_2.
"""

import functools
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass, field
from typing import Any

from src.core.categories.cyclic import (
    LambdaMap,
    delta_lambda_decompose,
    presentation_instances,
    tau,
)
from src.core.categories.delta import DeltaMap, delta, epi_mono_factor, sigma, simplicial_relation_instances
from src.core.dtos import AuditReportDTO
from src.core.exceptions import CompositionError, InvalidMorphismError, TruncationError
from src.utils.logger import get_logger

logger = get_logger(__name__)

Cell = Hashable
Table = dict[Cell, Cell]


@dataclass(frozen=True)
class FiniteSimplicialSet:
    """Ensemble simplicial stocké jusqu'au niveau ``truncation``."""

    truncation: int
    levels: tuple[tuple[Cell, ...], ...]
    degeneracies: dict[tuple[int, int], Table] = field(default_factory=dict, compare=False)
    faces: dict[tuple[int, int], Table] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        """Check that every table is total and lands in the right level."""
        object.__setattr__(self, "levels", tuple(tuple(level) for level in self.levels))
        if self.truncation < 0 or len(self.levels) != self.truncation + 1:
            raise TruncationError(f"Expected {self.truncation + 1} levels, got {len(self.levels)}")
        for n in range(self.truncation):
            for j in range(n + 1):
                self._check_table(self.degeneracies.get((n, j)), n, n + 1, f"σ_{j} on level {n}")
        for n in range(1, self.truncation + 1):
            for j in range(n + 1):
                self._check_table(self.faces.get((n, j)), n, n - 1, f"δ_{j} on level {n}")

    def _check_table(self, table: Table | None, source: int, target: int, label: str) -> None:
        if table is None:
            raise InvalidMorphismError(f"Missing table for {label}")
        cells, image = set(self.levels[source]), set(self.levels[target])
        if set(table) != cells or not set(table.values()) <= image:
            raise InvalidMorphismError(f"Table for {label} is not a map S_{source} → S_{target}")

    @functools.cached_property
    def _degenerate_index(self) -> dict[tuple[int, Cell], list[tuple[int, Cell]]]:
        """(n, x) ↦ sorted list of (j, y) with y·σ_j = x, y at level n−1."""
        index: dict[tuple[int, Cell], list[tuple[int, Cell]]] = {}
        for (n, j), table in sorted(self.degeneracies.items(), key=lambda item: item[0]):
            for y, x in table.items():
                index.setdefault((n + 1, x), []).append((j, y))
        return index

    def check_level(self, n: int) -> None:
        """Raise TruncationError above the stored levels."""
        if not 0 <= n <= self.truncation:
            raise TruncationError(f"Level {n} is outside 0..{self.truncation}")

    def face(self, x: Cell, n: int, j: int) -> Cell:
        """x·δ_j for x ∈ S_n."""
        return self.faces[(n, j)][x]

    def degeneracy(self, x: Cell, n: int, j: int) -> Cell:
        """x·σ_j for x ∈ S_n."""
        self.check_level(n + 1)
        return self.degeneracies[(n, j)][x]

    def degenerate_sources(self, x: Cell, n: int) -> list[tuple[int, Cell]]:
        """All (j, y) with y·σ_j = x, smallest j first."""
        return self._degenerate_index.get((n, x), [])

    def is_degenerate(self, x: Cell, n: int) -> bool:
        """True when x lies in the image of some degeneracy."""
        return bool(self.degenerate_sources(x, n))

    def act(self, x: Cell, n: int, phi: DeltaMap) -> Cell:
        """x·φ for x ∈ S_n and φ: [m] → [n].

        Faces of the normal form act first, in written order, then the degeneracies.

        Raises:
            CompositionError: If φ does not land in [n]
            TruncationError: If [m] is above the truncation

        """
        if phi.target_rank != n:
            raise CompositionError(f"φ lands in [{phi.target_rank}] but the cell is at level {n}")
        self.check_level(n)
        self.check_level(phi.source_rank)
        delta_indices, sigma_indices = epi_mono_factor(phi)
        level = n
        for i in delta_indices:
            x = self.face(x, level, i)
            level -= 1
        for j in sigma_indices:
            x = self.degeneracy(x, level, j)
            level += 1
        return x

    def act_letter(self, x: Cell, n: int, letter: Any) -> Cell:
        """Action of one word letter (a DeltaMap or a LambdaMap in the image of Δ)."""
        if isinstance(letter, LambdaMap):
            h, a = delta_lambda_decompose(letter)
            if a:
                raise CompositionError("Rotations do not act on a simplicial set")
            letter = h
        return self.act(x, n, letter)


@dataclass(frozen=True)
class FiniteCyclicSet(FiniteSimplicialSet):
    """Ensemble simplicial muni d'une action compatible de τ_n à chaque niveau."""

    rotations: dict[int, Table] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        """Also check the rotation tables."""
        super().__post_init__()
        for n in range(self.truncation + 1):
            self._check_table(self.rotations.get(n), n, n, f"τ_{n}")

    def rotate(self, x: Cell, n: int, times: int = 1) -> Cell:
        """x·τ_n^times (any integer ``times``)."""
        for _ in range(times % (n + 1)):
            x = self.rotations[n][x]
        return x

    def act_lambda(self, x: Cell, n: int, f: LambdaMap) -> Cell:
        """x·f for f = j(h)∘τ^a: first x·h, then τ^a.

        Raises:
            CompositionError: If f does not land in [n]

        """
        if f.target_rank != n:
            raise CompositionError(f"f lands in [{f.target_rank}] but the cell is at level {n}")
        h, a = delta_lambda_decompose(f)
        return self.rotate(self.act(x, n, h), f.source_rank, a)

    def act_letter(self, x: Cell, n: int, letter: Any) -> Cell:
        """Action of one word letter; rotations use the τ table directly."""
        if isinstance(letter, LambdaMap):
            if letter == tau(n):
                return self.rotations[n][x]
            return self.act_lambda(x, n, letter)
        return self.act(x, n, letter)


def build_simplicial_set(
    truncation: int, levels: Sequence[Sequence[Cell]], act: Callable[[Cell, int, DeltaMap], Cell]
) -> FiniteSimplicialSet:
    """Tabulate generator actions from a callable ``act(x, n, φ)``."""
    degeneracies = {
        (n, j): {x: act(x, n, sigma(j, n)) for x in levels[n]} for n in range(truncation) for j in range(n + 1)
    }
    faces = {
        (n, j): {x: act(x, n, delta(j, n)) for x in levels[n]}
        for n in range(1, truncation + 1)
        for j in range(n + 1)
    }
    return FiniteSimplicialSet(truncation, tuple(tuple(level) for level in levels), degeneracies, faces)


def build_cyclic_set(
    truncation: int, levels: Sequence[Sequence[Cell]], act: Callable[[Cell, int, LambdaMap | DeltaMap], Cell]
) -> FiniteCyclicSet:
    """Tabulate σ, δ and τ actions from a callable ``act(x, n, f)``."""
    base = build_simplicial_set(truncation, levels, act)
    rotations = {n: {x: act(x, n, tau(n)) for x in levels[n]} for n in range(truncation + 1)}
    return FiniteCyclicSet(base.truncation, base.levels, base.degeneracies, base.faces, rotations)


def _audit_words(s: FiniteSimplicialSet, instances: list, name: str) -> AuditReportDTO:
    failures = []
    checked = 0
    for instance in instances:
        for x in s.levels[instance.target]:
            checked += 1
            left, right = x, x
            level = instance.target
            for letter in instance.lhs:
                left = s.act_letter(left, level, letter)
                level = letter.source_rank
            level = instance.target
            for letter in instance.rhs:
                right = s.act_letter(right, level, letter)
                level = letter.source_rank
            if left != right:
                failures.append(f"{instance.name} at {x!r}: {left!r} != {right!r}")
    if failures:
        logger.warning("[AUDIT] %s: %d failures", name, len(failures))
    logger.info("[AUDIT] %s: %d cell checks", name, checked)
    return AuditReportDTO(name=name, checked=checked, failures=tuple(failures))


def simplicial_set_audit(s: FiniteSimplicialSet) -> AuditReportDTO:
    """Check the simplicial identities on every cell below the truncation."""
    return _audit_words(s, simplicial_relation_instances(s.truncation), "simplicial-set")


def cyclic_set_audit(s: FiniteCyclicSet) -> AuditReportDTO:
    """Check the simplicial identities and the Λ presentation on every cell."""
    simplicial = simplicial_set_audit(s)
    cyclic = _audit_words(s, presentation_instances(s.truncation), "cyclic-set")
    return simplicial.merge(cyclic, name="cyclic-set")


def nondegenerate_cells(s: FiniteSimplicialSet, n: int) -> list[Cell]:
    """Cells of S_n outside the image of every degeneracy, in level order."""
    s.check_level(n)
    return [x for x in s.levels[n] if not s.is_degenerate(x, n)]
