"""Formes JSON des morphismes, suites, éléments PL, ensembles cycliques et cercles abstraits.

Rationals are written as ``"p/q"`` strings (integers as ``"n"``) so that
payloads stay exact.
"""

from collections.abc import Hashable, Mapping
from fractions import Fraction
from typing import Any

from src.core.categories.cyclic import LambdaMap
from src.core.categories.delta import DeltaMap, IntervalMap
from src.core.categories.expressions import format_expression
from src.core.circles.abstract_circle import AbstractCircle
from src.core.cyclic_sets.finite_sets import Cell, FiniteCyclicSet, FiniteSimplicialSet
from src.core.dtos import AuditReportDTO
from src.core.exceptions import CyclicError, PayloadError
from src.core.groups.piecewise_linear import PLElement, pl_from_points
from src.core.intervals.interval import FiniteInterval, Interval, interval_from_name
from src.core.intervals.sequences import MonotoneSeq
from src.utils.logger import get_logger

logger = get_logger(__name__)


# ===== Nombres =====


def fraction_to_json(q: Fraction | int) -> str:
    """Exact string form ``p/q``."""
    return str(Fraction(q))


def fraction_from_json(value: Any) -> Fraction:
    """Parse ``"p/q"``, ``"n"`` or a JSON integer.

    Raises:
        PayloadError: For floats, booleans and malformed strings

    """
    if isinstance(value, bool) or not isinstance(value, int | str):
        raise PayloadError(f"Expected a rational as 'p/q', got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise PayloadError(f"Malformed rational {value!r}") from e


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise PayloadError(f"{what} must be an integer, got {value!r}")
    return value


def _field(payload: Mapping[str, Any], key: str) -> Any:
    if not isinstance(payload, Mapping):
        raise PayloadError(f"Expected a JSON object, got {type(payload).__name__}")
    if key not in payload:
        raise PayloadError(f"Missing field {key!r}")
    return payload[key]


# ===== Morphismes =====


def morphism_to_json(f: DeltaMap | LambdaMap | IntervalMap) -> dict[str, Any]:
    """``{"cat": ..., "source": n, "target": m, "values": [...]}``."""
    cat = {DeltaMap: "delta", LambdaMap: "lambda", IntervalMap: "interval"}[type(f)]
    return {"cat": cat, "source": f.source_rank, "target": f.target_rank, "values": list(f.values)}


def morphism_from_json(payload: Mapping[str, Any]) -> DeltaMap | LambdaMap | IntervalMap:
    """Inverse of ``morphism_to_json``.

    Raises:
        PayloadError: For unknown categories, missing fields or invalid values

    """
    builders = {"delta": DeltaMap, "lambda": LambdaMap, "interval": IntervalMap}
    cat = _field(payload, "cat")
    if cat not in builders:
        raise PayloadError(f"Unknown morphism category {cat!r}")
    source = _int(_field(payload, "source"), "source")
    target = _int(_field(payload, "target"), "target")
    values = _field(payload, "values")
    if not isinstance(values, list):
        raise PayloadError("'values' must be a list")
    try:
        return builders[cat](source, target, tuple(_int(v, "value") for v in values))
    except CyclicError as e:
        raise PayloadError(f"Invalid {cat} morphism: {e.message}") from e


# ===== Suites et éléments PL =====


def value_to_json(interval: Interval, value: Any) -> Any:
    """Integer, ``"p/q"`` string or PL breakpoint object, depending on the interval."""
    if isinstance(interval, FiniteInterval):
        return value
    if isinstance(value, PLElement):
        return pl_to_json(value)
    return fraction_to_json(value)


def sequence_to_json(beta: MonotoneSeq) -> dict[str, Any]:
    """``{"interval": name, "values": [...]}``."""
    return {"interval": beta.interval.name, "values": [value_to_json(beta.interval, v) for v in beta.values]}


def sequence_from_json(payload: Mapping[str, Any]) -> MonotoneSeq:
    """Inverse of ``sequence_to_json`` for finite and rational intervals.

    Raises:
        PayloadError: For unknown intervals or invalid sequences

    """
    try:
        interval = interval_from_name(_field(payload, "interval"))
    except CyclicError as e:
        raise PayloadError(e.message) from e
    raw = _field(payload, "values")
    if not isinstance(raw, list) or len(raw) < 2:
        raise PayloadError("'values' must list at least the two endpoints")
    if isinstance(interval, FiniteInterval):
        values = tuple(_int(v, "value") for v in raw)
    else:
        values = tuple(fraction_from_json(v) for v in raw)
    try:
        return MonotoneSeq(interval, len(values) - 2, values)
    except CyclicError as e:
        raise PayloadError(f"Invalid sequence: {e.message}") from e


def pl_to_json(phi: PLElement) -> dict[str, Any]:
    """``{"breakpoints": [["x", "y"], ...]}``."""
    return {"breakpoints": [[fraction_to_json(x), fraction_to_json(y)] for x, y in phi.breakpoints]}


def pl_from_json(payload: Mapping[str, Any]) -> PLElement:
    """Canonical PL element through the listed points.

    Raises:
        PayloadError: If the points do not describe an element of the group

    """
    raw = _field(payload, "breakpoints")
    if not isinstance(raw, list) or not all(isinstance(p, list) and len(p) == 2 for p in raw):
        raise PayloadError("'breakpoints' must be a list of [x, y] pairs")
    try:
        return pl_from_points((fraction_from_json(x), fraction_from_json(y)) for x, y in raw)
    except CyclicError as e:
        raise PayloadError(f"Invalid PL element: {e.message}") from e


# ===== Ensembles cycliques =====


def cell_label(cell: Cell) -> str:
    """Injective string label of a cell built by the library."""
    if isinstance(cell, str):
        return cell
    if isinstance(cell, DeltaMap | LambdaMap):
        return format_expression(cell)
    if isinstance(cell, tuple):
        return "(" + ", ".join(cell_label(c) for c in cell) + ")"
    return str(cell)


def cyclic_set_to_json(s: FiniteSimplicialSet) -> dict[str, Any]:
    """``{"N", "levels", "sigma", "delta", "tau"}`` with tables keyed by ``"n,j"`` (``"n"`` for τ)."""

    def table(t: Mapping[Cell, Cell]) -> dict[str, str]:
        return {cell_label(x): cell_label(y) for x, y in t.items()}

    payload: dict[str, Any] = {
        "N": s.truncation,
        "levels": [[cell_label(x) for x in level] for level in s.levels],
        "sigma": {f"{n},{j}": table(t) for (n, j), t in sorted(s.degeneracies.items())},
        "delta": {f"{n},{j}": table(t) for (n, j), t in sorted(s.faces.items())},
    }
    if isinstance(s, FiniteCyclicSet):
        payload["tau"] = {str(n): table(t) for n, t in sorted(s.rotations.items())}
    return payload


def _index_key(key: str, parts: int) -> tuple[int, ...]:
    pieces = key.split(",")
    if len(pieces) != parts or not all(p.strip().isdigit() for p in pieces):
        raise PayloadError(f"Malformed table key {key!r}")
    return tuple(int(p) for p in pieces)


def _tables(payload: Mapping[str, Any], name: str, parts: int) -> dict[Any, dict[Cell, Cell]]:
    raw = _field(payload, name)
    if not isinstance(raw, Mapping) or not all(isinstance(t, Mapping) for t in raw.values()):
        raise PayloadError(f"'{name}' must map keys to cell tables")
    tables = {}
    for key, t in raw.items():
        index = _index_key(key, parts)
        tables[index if parts > 1 else index[0]] = dict(t)
    return tables


def cyclic_set_from_json(payload: Mapping[str, Any]) -> FiniteSimplicialSet:
    """Rebuild a finite simplicial set, or a cyclic set when ``"tau"`` is present.

    Raises:
        PayloadError: For a malformed payload or tables that are not total

    """
    truncation = _int(_field(payload, "N"), "N")
    levels = _field(payload, "levels")
    if not isinstance(levels, list) or not all(isinstance(level, list) for level in levels):
        raise PayloadError("'levels' must be a list of cell lists")
    degeneracies = _tables(payload, "sigma", 2)
    faces = _tables(payload, "delta", 2)
    try:
        if "tau" in payload:
            rotations = _tables(payload, "tau", 1)
            s: FiniteSimplicialSet = FiniteCyclicSet(truncation, levels, degeneracies, faces, rotations)
        else:
            s = FiniteSimplicialSet(truncation, levels, degeneracies, faces)
    except CyclicError as e:
        raise PayloadError(f"Invalid cyclic set: {e.message}") from e
    logger.info("[LOADER] Ensemble %s tronqué à N=%d", type(s).__name__, truncation)
    return s


# ===== Cercles abstraits =====


def _circle_label(x: Hashable) -> str:
    if isinstance(x, tuple):
        return ":".join(str(v) for v in x)
    return str(x)


def circle_to_json(c: AbstractCircle) -> dict[str, Any]:
    """``{"P", "S", "d0", "d1", "zero", "one", "star", "cup": [[a, b, c], ...]}``."""
    lab = _circle_label
    return {
        "P": [lab(x) for x in c.points],
        "S": [lab(a) for a in c.segments],
        "d0": {lab(a): lab(c.d0[a]) for a in c.segments},
        "d1": {lab(a): lab(c.d1[a]) for a in c.segments},
        "zero": {lab(x): lab(c.zero[x]) for x in c.points},
        "one": {lab(x): lab(c.one[x]) for x in c.points},
        "star": {lab(a): lab(c.star[a]) for a in c.segments},
        "cup": [[lab(a), lab(b), lab(ab)] for (a, b), ab in c.cup.items()],
    }


def circle_from_json(payload: Mapping[str, Any]) -> AbstractCircle:
    """Abstract circle with string labels.

    Raises:
        PayloadError: When a structure map is missing an entry or names an unknown label

    """
    points = tuple(str(x) for x in _field(payload, "P"))
    segments = tuple(str(a) for a in _field(payload, "S"))

    def structure(name: str, domain: tuple[str, ...], codomain: tuple[str, ...]) -> dict[str, str]:
        raw = _field(payload, name)
        if not isinstance(raw, Mapping):
            raise PayloadError(f"'{name}' must be an object")
        table = {str(k): str(v) for k, v in raw.items()}
        if set(table) != set(domain) or not set(table.values()) <= set(codomain):
            raise PayloadError(f"'{name}' must map every element of its domain into its codomain")
        return table

    cup: dict[tuple[Hashable, Hashable], Hashable] = {}
    for entry in _field(payload, "cup"):
        if not isinstance(entry, list) or len(entry) != 3:
            raise PayloadError(f"Malformed cup entry {entry!r}")
        a, b, ab = (str(v) for v in entry)
        if not {a, b, ab} <= set(segments):
            raise PayloadError(f"Cup entry {entry!r} names an unknown segment")
        cup[(a, b)] = ab
    return AbstractCircle(
        points=points,
        segments=segments,
        d0=structure("d0", segments, points),
        d1=structure("d1", segments, points),
        zero=structure("zero", points, segments),
        one=structure("one", points, segments),
        star=structure("star", segments, segments),
        cup=cup,
    )


# ===== Rapports =====


def report_to_json(report: AuditReportDTO) -> dict[str, Any]:
    """``{"name", "checked", "failures", "passed"}``."""
    return {
        "name": report.name,
        "checked": report.checked,
        "failures": list(report.failures),
        "passed": report.passed,
    }
