"""Constructions: point, simplexes de Yoneda, induction j_!, produits, cercle C."""

from collections.abc import Hashable
from itertools import product

from src.core.categories.cyclic import (
    LambdaMap,
    crossed_decompose,
    delta_lambda_decompose,
    embed_j,
    enumerate_lambda_hom,
    lambda_compose,
    tau_power,
)
from src.core.categories.delta import DeltaMap, delta_compose, enumerate_delta_hom
from src.core.cyclic_sets.finite_sets import (
    Cell,
    FiniteCyclicSet,
    FiniteSimplicialSet,
    build_cyclic_set,
    build_simplicial_set,
)
from src.core.exceptions import TruncationError
from src.utils.config import DEFAULT_TRUNCATION
from src.utils.logger import get_logger

logger = get_logger(__name__)

POINT = "*"

LevelMap = dict[int, dict[Cell, Cell]]


def automorphisms(n: int) -> list[LambdaMap]:
    """Aut_Λ([n]) = {τ_n^a : 0 ≤ a ≤ n}."""
    return [tau_power(n, a) for a in range(n + 1)]


def point_set(truncation: int = DEFAULT_TRUNCATION) -> FiniteCyclicSet:
    """Terminal cyclic set: one cell per level."""
    levels = [(POINT,)] * (truncation + 1)
    return build_cyclic_set(truncation, levels, lambda x, n, f: POINT)


def standard_simplex(k: int, truncation: int = DEFAULT_TRUNCATION) -> FiniteSimplicialSet:
    """Yoneda simplicial set Hom_Δ(·, [k]) acting by precomposition."""
    levels = [enumerate_delta_hom(n, k) for n in range(truncation + 1)]
    return build_simplicial_set(truncation, levels, lambda x, n, phi: delta_compose(phi, x))


def yoneda_cyclic(k: int, truncation: int = DEFAULT_TRUNCATION) -> FiniteCyclicSet:
    """Yoneda cyclic set Hom_Λ(·, [k]) acting by precomposition."""
    levels = [enumerate_lambda_hom(n, k) for n in range(truncation + 1)]

    def act(x: LambdaMap, n: int, f: LambdaMap | DeltaMap) -> LambdaMap:
        lifted = embed_j(f) if isinstance(f, DeltaMap) else f
        return lambda_compose(lifted, x)

    logger.debug("[CYCLIC] Yoneda set of [%d] up to level %d", k, truncation)
    return build_cyclic_set(truncation, levels, act)


def induce_j(s: FiniteSimplicialSet) -> FiniteCyclicSet:
    """Left adjoint j_!: cells (x, γ) with x ∈ S_n and γ ∈ Aut_Λ([n]).

    (x, γ)·φ = (x·γ_*(φ), φ^*(γ)) for φ in Δ and (x, γ)·τ^a = (x, γ∘τ^a).
    """
    levels = [[(x, gamma) for x in s.levels[n] for gamma in automorphisms(n)] for n in range(s.truncation + 1)]

    def act_delta(cell: tuple[Cell, LambdaMap], n: int, phi: DeltaMap) -> tuple[Cell, LambdaMap]:
        x, gamma = cell
        gamma_star_phi, phi_star_gamma = crossed_decompose(gamma, phi)
        return s.act(x, n, gamma_star_phi), phi_star_gamma

    def act(cell: tuple[Cell, LambdaMap], n: int, f: LambdaMap | DeltaMap) -> tuple[Cell, LambdaMap]:
        if isinstance(f, DeltaMap):
            return act_delta(cell, n, f)
        h, a = delta_lambda_decompose(f)
        x, gamma = act_delta(cell, n, h)
        return x, lambda_compose(tau_power(f.source_rank, a), gamma)

    logger.debug("[CYCLIC] j_! of a simplicial set with %d levels", s.truncation + 1)
    return build_cyclic_set(s.truncation, levels, act)


def circle_set(truncation: int = DEFAULT_TRUNCATION) -> FiniteCyclicSet:
    """C = j_!(point); level n has the n+1 cells (*, τ_n^a)."""
    return induce_j(point_set(truncation))


def cyclic_product(*factors: FiniteCyclicSet) -> FiniteCyclicSet:
    """Levelwise product with the diagonal action; cells are tuples.

    Raises:
        TruncationError: If the factors are truncated at different levels

    """
    if not factors:
        raise TruncationError("A product needs at least one factor")
    truncation = factors[0].truncation
    if any(f.truncation != truncation for f in factors):
        raise TruncationError(f"Factors have truncations {[f.truncation for f in factors]}")

    levels = tuple(tuple(product(*(f.levels[n] for f in factors))) for n in range(truncation + 1))

    def componentwise(tables: list[dict[Cell, Cell]], cells: tuple[Cell, ...]) -> dict[Cell, Cell]:
        return {cell: tuple(t[c] for t, c in zip(tables, cell, strict=True)) for cell in cells}

    degeneracies = {
        (n, j): componentwise([f.degeneracies[(n, j)] for f in factors], levels[n])
        for n in range(truncation)
        for j in range(n + 1)
    }
    faces = {
        (n, j): componentwise([f.faces[(n, j)] for f in factors], levels[n])
        for n in range(1, truncation + 1)
        for j in range(n + 1)
    }
    rotations = {n: componentwise([f.rotations[n] for f in factors], levels[n]) for n in range(truncation + 1)}
    return FiniteCyclicSet(truncation, levels, degeneracies, faces, rotations)


def circle_square(truncation: int = DEFAULT_TRUNCATION) -> FiniteCyclicSet:
    """C × C."""
    c = circle_set(truncation)
    return cyclic_product(c, c)


def circle_cube(truncation: int = DEFAULT_TRUNCATION) -> FiniteCyclicSet:
    """C × C × C."""
    c = circle_set(truncation)
    return cyclic_product(c, c, c)


def theta_map(s: FiniteCyclicSet) -> LevelMap:
    """ϑ_S: j_!(S) → C × S, (x, γ) ↦ ((*, γ), x·γ)."""
    return {
        n: {(x, gamma): ((POINT, gamma), s.act_lambda(x, n, gamma)) for x in s.levels[n] for gamma in automorphisms(n)}
        for n in range(s.truncation + 1)
    }


def circle_yoneda_map(truncation: int = DEFAULT_TRUNCATION) -> LevelMap:
    """i: j_!(point) → Hom_Λ(·, [0]), (*, γ) ↦ f_n∘γ with f_n: [n] → [0]."""
    result: LevelMap = {}
    for n in range(truncation + 1):
        f_n = embed_j(DeltaMap(n, 0, (0,) * (n + 1)))
        result[n] = {(POINT, gamma): lambda_compose(gamma, f_n) for gamma in automorphisms(n)}
    return result


def is_levelwise_isomorphism(
    s: FiniteSimplicialSet, t: FiniteSimplicialSet, mapping: LevelMap, cyclic: bool = False
) -> bool:
    """True when ``mapping`` is bijective on each level and commutes with σ, δ (and τ if ``cyclic``)."""
    if s.truncation != t.truncation:
        return False
    for n in range(s.truncation + 1):
        level = mapping.get(n, {})
        if set(level) != set(s.levels[n]) or set(level.values()) != set(t.levels[n]):
            logger.debug("[CYCLIC] level %d is not mapped bijectively", n)
            return False
        if len(set(level.values())) != len(level):
            return False
    for (n, j), table in s.degeneracies.items():
        if any(mapping[n + 1][y] != t.degeneracies[(n, j)][mapping[n][x]] for x, y in table.items()):
            return False
    for (n, j), table in s.faces.items():
        if any(mapping[n - 1][y] != t.faces[(n, j)][mapping[n][x]] for x, y in table.items()):
            return False
    if cyclic:
        if not isinstance(s, FiniteCyclicSet) or not isinstance(t, FiniteCyclicSet):
            return False
        for n, table in s.rotations.items():
            if any(mapping[n][y] != t.rotations[n][mapping[n][x]] for x, y in table.items()):
                return False
    return True


def named_cyclic_set(name: str, truncation: int = DEFAULT_TRUNCATION) -> FiniteCyclicSet | FiniteSimplicialSet:
    """Resolve ``point``, ``circle``, ``circle-square``, ``circle-cube``, ``yoneda:k`` or ``simplex:k``.

    Raises:
        KeyError: For unknown names

    """
    builders = {
        "point": point_set,
        "circle": circle_set,
        "circle-square": circle_square,
        "circle-cube": circle_cube,
    }
    if name in builders:
        return builders[name](truncation)
    kind, _, arg = name.partition(":")
    if kind == "yoneda" and arg.isdigit():
        return yoneda_cyclic(int(arg), truncation)
    if kind == "simplex" and arg.isdigit():
        return standard_simplex(int(arg), truncation)
    raise KeyError(name)


def circle_exponent(cell: Hashable) -> int:
    """Rotation exponent a of a circle cell (*, τ_n^a)."""
    _, gamma = cell  # type: ignore[misc]
    _, a = delta_lambda_decompose(gamma)
    return a
