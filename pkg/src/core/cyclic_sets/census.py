"""Recensement des cellules non dégénérées et triangulation naturelle de C × C."""

from src.core.categories.cyclic import tau_power
from src.core.cyclic_sets.constructions import POINT
from src.core.cyclic_sets.finite_sets import Cell, FiniteSimplicialSet, nondegenerate_cells
from src.utils.logger import get_logger

logger = get_logger(__name__)

# (label, exposant de la première composante, exposant de la seconde, niveau)
_CIRCLE_SQUARE_LABELS = (
    ("1", 0, 0, 0),
    ("L1", 0, 1, 1),
    ("L2", 1, 0, 1),
    ("L3", 1, 1, 1),
    ("T1", 1, 2, 2),
    ("T2", 2, 1, 2),
)

CIRCLE_SQUARE_FACES = {
    ("T1", 0): "L1",
    ("T1", 1): "L3",
    ("T1", 2): "L2",
    ("T2", 0): "L2",
    ("T2", 1): "L3",
    ("T2", 2): "L1",
}

# (exposants au niveau 1, indice j) -> exposants au niveau 2
CIRCLE_SQUARE_DEGENERACIES = {
    ((0, 0), 0): (0, 0),
    ((0, 1), 0): (0, 2),
    ((1, 0), 0): (2, 0),
    ((1, 1), 0): (2, 2),
    ((0, 0), 1): (0, 0),
    ((0, 1), 1): (0, 1),
    ((1, 0), 1): (1, 0),
    ((1, 1), 1): (1, 1),
}


def census(s: FiniteSimplicialSet) -> tuple[int, ...]:
    """Number of nondegenerate cells on each level 0..N."""
    counts = tuple(len(nondegenerate_cells(s, n)) for n in range(s.truncation + 1))
    logger.debug("[CENSUS] nondegenerate counts %s", counts)
    return counts


def face_table(s: FiniteSimplicialSet, n: int) -> dict[tuple[Cell, int], Cell]:
    """(x, j) ↦ x·δ_j for every nondegenerate x of level n ≥ 1."""
    return {(x, j): s.face(x, n, j) for x in nondegenerate_cells(s, n) for j in range(n + 1)}


def degeneracy_table(s: FiniteSimplicialSet, n: int) -> dict[tuple[Cell, int], Cell]:
    """(x, j) ↦ x·σ_j for every x of level n < N."""
    s.check_level(n + 1)
    return {(x, j): s.degeneracy(x, n, j) for x in s.levels[n] for j in range(n + 1)}


def circle_pair(a: int, b: int, n: int) -> Cell:
    """Cell (τ_n^a, τ_n^b) of C × C."""
    return (POINT, tau_power(n, a)), (POINT, tau_power(n, b))


def circle_square_labels() -> dict[str, tuple[int, Cell]]:
    """Named cells 1, L1, L2, L3, T1, T2 of C × C with their level."""
    return {label: (n, circle_pair(a, b, n)) for label, a, b, n in _CIRCLE_SQUARE_LABELS}


def label_of(cell: Cell) -> str | None:
    """Inverse of ``circle_square_labels`` (None for unnamed cells)."""
    for label, (_, named) in circle_square_labels().items():
        if named == cell:
            return label
    return None
