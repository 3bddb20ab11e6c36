"""Hypothesis strategies for morphisms of Δ and Λ."""

from hypothesis import strategies as st

from src.core.categories.cyclic import LambdaMap
from src.core.categories.delta import DeltaMap

MAX_RANK = 4


@st.composite
def delta_maps(draw, source: int | None = None, target: int | None = None, max_rank: int = MAX_RANK) -> DeltaMap:
    """Non-decreasing map [n] → [m]."""
    n = draw(st.integers(0, max_rank)) if source is None else source
    m = draw(st.integers(0, max_rank)) if target is None else target
    values = draw(st.lists(st.integers(0, m), min_size=n + 1, max_size=n + 1))
    return DeltaMap(n, m, tuple(sorted(values)))


@st.composite
def lambda_maps(draw, source: int | None = None, target: int | None = None, max_rank: int = MAX_RANK) -> LambdaMap:
    """Canonical representative of a morphism [n] → [m] of Λ."""
    n = draw(st.integers(0, max_rank)) if source is None else source
    m = draw(st.integers(0, max_rank)) if target is None else target
    start = draw(st.integers(0, m))
    rest = draw(st.lists(st.integers(start, start + m + 1), min_size=n, max_size=n))
    return LambdaMap(n, m, (start, *sorted(rest)))


@st.composite
def composable_lambda_pairs(draw, max_rank: int = MAX_RANK) -> tuple[LambdaMap, LambdaMap]:
    """(f, g) with f: [n] → [m] and g: [m] → [k]."""
    f = draw(lambda_maps(max_rank=max_rank))
    g = draw(lambda_maps(source=f.target_rank, max_rank=max_rank))
    return f, g


@st.composite
def composable_lambda_triples(draw, max_rank: int = MAX_RANK) -> tuple[LambdaMap, LambdaMap, LambdaMap]:
    """(f, g, h) with f then g then h defined."""
    f, g = draw(composable_lambda_pairs(max_rank=max_rank))
    h = draw(lambda_maps(source=g.target_rank, max_rank=max_rank))
    return f, g, h
