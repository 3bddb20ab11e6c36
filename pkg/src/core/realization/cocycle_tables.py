"""Tables d'indices du cocycle sur les simplexes non dégénérés de C × C × C.

A nondegenerate cell (τ^{a_0}, τ^{a_1}, τ^{a_2}) of level n gives one row:
ω(a_0, a_1, a_2), then b_0 = a_0 − a_1 and b_1 = a_2 − a_1 mod n+1 with ρ(b_0, b_1).
"""

from collections.abc import Callable
from dataclasses import dataclass

from src.core.cyclic_sets.constructions import circle_cube, circle_exponent
from src.core.cyclic_sets.finite_sets import nondegenerate_cells
from src.core.intervals.interval import FiniteInterval
from src.core.realization.circle import CirclePoint, omega, rho
from src.utils.config import COCYCLE_TABLE_DIMENSIONS
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class CocycleRow:
    """Une ligne: les exposants avec ω, les indices réduits avec ρ."""

    exponents: tuple[int, int, int]
    omega: int
    indices: tuple[int, int]
    rho: int

    def format(self) -> str:
        """``(a0, a1, a2) -> ω | (b0, b1) -> ρ``."""
        return f"{self.exponents} -> {self.omega} | {self.indices} -> {self.rho}"


def cocycle_row(exponents: tuple[int, int, int], n: int) -> CocycleRow:
    """Row of the cell with the given exponents at level n."""
    interval = FiniteInterval(n)
    a0, a1, a2 = exponents
    points = [CirclePoint(interval, a) for a in exponents]
    b0, b1 = (a0 - a1) % (n + 1), (a2 - a1) % (n + 1)
    return CocycleRow(
        exponents=exponents,
        omega=omega(*points),
        indices=(b0, b1),
        rho=rho(CirclePoint(interval, b0), CirclePoint(interval, b1)),
    )


def _row_order(n: int) -> Callable[[tuple[int, ...]], tuple]:
    if n == 1:
        return lambda e: (sum(1 for a in e if a), tuple(-a for a in e))
    return lambda e: e


def cocycle_tables(dimensions: tuple[int, ...] = COCYCLE_TABLE_DIMENSIONS) -> dict[int, list[CocycleRow]]:
    """Rows for each dimension, from the nondegenerate cells of C × C × C.

    Dimension one is listed by number of non-zero exponents, then in
    descending lexicographic order; higher dimensions in ascending order.
    """
    cube = circle_cube(max(dimensions))
    tables: dict[int, list[CocycleRow]] = {}
    for n in dimensions:
        exponents = [tuple(circle_exponent(c) for c in cell) for cell in nondegenerate_cells(cube, n)]
        tables[n] = [cocycle_row(e, n) for e in sorted(exponents, key=_row_order(n))]
        logger.debug("[COCYCLE] dimension %d: %d rows", n, len(tables[n]))
    return tables


def format_cocycle_tables(tables: dict[int, list[CocycleRow]]) -> str:
    """Text form, one block per dimension separated by a blank line."""
    blocks = []
    for n, rows in tables.items():
        blocks.append("\n".join([f"dimension {n}", *(row.format() for row in rows)]))
    return "\n\n".join(blocks) + "\n"


def cocycle_tables_json(tables: dict[int, list[CocycleRow]]) -> dict[str, list[dict]]:
    """JSON form keyed by dimension."""
    return {
        str(n): [
            {"simplex": list(r.exponents), "omega": r.omega, "indices": list(r.indices), "rho": r.rho} for r in rows
        ]
        for n, rows in tables.items()
    }
