"""Simplexe standard: points barycentriques et action affine de Λ à travers μ."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

from src.core.categories.cyclic import FinMap, LambdaMap, mu
from src.core.exceptions import CompositionError, InvalidSequenceError
from src.core.intervals.interval import RationalUnit
from src.core.intervals.sequences import MonotoneSeq


@dataclass(frozen=True)
class BarycentricPoint:
    """Point Σ u_j v_j du n-simplexe standard."""

    rank: int
    coordinates: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        """Coordinates must be non-negative and sum to 1."""
        object.__setattr__(self, "coordinates", tuple(Fraction(u) for u in self.coordinates))
        if len(self.coordinates) != self.rank + 1:
            raise InvalidSequenceError(f"Rank {self.rank} needs {self.rank + 1} coordinates")
        if any(u < 0 for u in self.coordinates) or sum(self.coordinates) != 1:
            raise InvalidSequenceError(f"Not a barycentric point: {[str(u) for u in self.coordinates]}")


def simplex_encode(beta: MonotoneSeq) -> BarycentricPoint:
    """u_j = β_{j+1} − β_j.

    Raises:
        InvalidSequenceError: If ``beta`` is not over the rational unit interval

    """
    if not isinstance(beta.interval, RationalUnit):
        raise InvalidSequenceError(f"Barycentric encoding needs rational-unit, got {beta.interval.name}")
    values = beta.values
    return BarycentricPoint(beta.rank, tuple(values[j + 1] - values[j] for j in range(beta.rank + 1)))


def simplex_decode(u: BarycentricPoint) -> MonotoneSeq:
    """β_a = u_0 + … + u_{a−1}."""
    sums = (Fraction(0), *accumulate(u.coordinates))
    return MonotoneSeq(RationalUnit(), u.rank, sums)


def fin_affine_act(f: LambdaMap | FinMap, u: BarycentricPoint) -> BarycentricPoint:
    """Affine extension of the vertex map v_j ↦ v_{μ(f)(j)}.

    Raises:
        CompositionError: If the source size of ``f`` is not rank + 1

    """
    vertex_map = mu(f) if isinstance(f, LambdaMap) else f
    if vertex_map.source_size != u.rank + 1:
        raise CompositionError(f"Map on {vertex_map.source_size} vertices cannot act on a {u.rank}-simplex")
    coordinates = [Fraction(0)] * vertex_map.target_size
    for j, k in enumerate(vertex_map.values):
        coordinates[k] += u.coordinates[j]
    return BarycentricPoint(vertex_map.target_size - 1, tuple(coordinates))
