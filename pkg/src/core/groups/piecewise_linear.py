"""Homéomorphismes linéaires par morceaux de ℝ commutant avec x ↦ x+1.

An element is stored by its breakpoints (x, φ(x)) with x ∈ [0, 1), always
including x = 0, sorted, with collinear points removed, so equality is
structural. Between breakpoints the map is affine; beyond one period it is
extended by φ(x + 1) = φ(x) + 1.
"""

import math
import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import pairwise

from src.core.exceptions import InvalidMorphismError
from src.core.groups.ordered_group import OrderedGroup
from src.core.sampling import random_fraction, random_unit_fraction, random_weights
from src.utils.config import PL_SAMPLE_MAX_BREAKPOINTS, PL_SAMPLE_MAX_DENOMINATOR, SAMPLE_INTEGER_SPAN
from src.utils.logger import get_logger

logger = get_logger(__name__)

Point = tuple[Fraction, Fraction]


def _collinear(p: Point, q: Point, r: Point) -> bool:
    return (q[1] - p[1]) * (r[0] - q[0]) == (r[1] - q[1]) * (q[0] - p[0])


@dataclass(frozen=True)
class PLElement:
    """Liste canonique des points de cassure d'un homéomorphisme PL périodique."""

    breakpoints: tuple[Point, ...]

    def __post_init__(self) -> None:
        """Validate the canonical form."""
        points = tuple((Fraction(x), Fraction(y)) for x, y in self.breakpoints)
        object.__setattr__(self, "breakpoints", points)
        if not points or points[0][0] != 0:
            raise InvalidMorphismError("A PL element needs a breakpoint at x = 0")
        closed = _closed(points)
        for (x0, y0), (x1, y1) in pairwise(closed):
            if not x0 < x1 or not y0 < y1:
                raise InvalidMorphismError(f"Breakpoints must increase strictly within one period: {_show(points)}")
        if closed[-2][0] >= 1:
            raise InvalidMorphismError(f"Breakpoint abscissae must lie in [0, 1): {_show(points)}")
        for i in range(1, len(points)):
            if _collinear(closed[i - 1], closed[i], closed[i + 1]):
                raise InvalidMorphismError(f"Redundant breakpoint at x = {points[i][0]}")

    def __call__(self, x: Fraction | int) -> Fraction:
        """Evaluate at ``x``."""
        return pl_eval(self, x)

    def __repr__(self) -> str:
        """Compact form listing the breakpoints."""
        return f"PL{_show(self.breakpoints)}"


def _closed(points: tuple[Point, ...]) -> list[Point]:
    x0, y0 = points[0]
    return [*points, (x0 + 1, y0 + 1)]


def _show(points: Iterable[Point]) -> str:
    return "[" + ", ".join(f"({x}, {y})" for x, y in points) + "]"


def pl_eval(phi: PLElement, x: Fraction | int) -> Fraction:
    """φ(x) for any rational ``x``."""
    x = Fraction(x)
    q = math.floor(x)
    r = x - q
    for (x0, y0), (x1, y1) in pairwise(_closed(phi.breakpoints)):
        if x0 <= r < x1:
            return y0 + (r - x0) * (y1 - y0) / (x1 - x0) + q
    raise InvalidMorphismError(f"Cannot evaluate {phi!r} at {x}")


def pl_from_points(points: Iterable[tuple[Fraction | int, Fraction | int]]) -> PLElement:
    """Build the canonical element through the given points.

    Abscissae are reduced mod 1, the value at 0 is interpolated when missing
    and collinear breakpoints are dropped.

    Raises:
        InvalidMorphismError: If the points do not describe an increasing periodic map

    """
    reduced: dict[Fraction, Fraction] = {}
    for x, y in points:
        x, y = Fraction(x), Fraction(y)
        shift = math.floor(x)
        x, y = x - shift, y - shift
        if reduced.get(x, y) != y:
            raise InvalidMorphismError(f"Two values given at x = {x}")
        reduced[x] = y
    if not reduced:
        raise InvalidMorphismError("A PL element needs at least one breakpoint")

    raw = sorted(reduced.items())
    for (_, y0), (_, y1) in pairwise([*raw, (raw[0][0] + 1, raw[0][1] + 1)]):
        if not y0 < y1:
            raise InvalidMorphismError(f"Points are not increasing through one period: {_show(raw)}")

    if raw[0][0] != 0:
        (xa, ya), (xb, yb) = (raw[-1][0] - 1, raw[-1][1] - 1), raw[0]
        raw.insert(0, (Fraction(0), ya + (0 - xa) * (yb - ya) / (xb - xa)))

    pruned = list(raw)
    changed = True
    while changed:
        changed = False
        closed = _closed(tuple(pruned))
        for i in range(1, len(pruned)):
            if _collinear(closed[i - 1], closed[i], closed[i + 1]):
                del pruned[i]
                changed = True
                break
    return PLElement(tuple(pruned))


def pl_identity() -> PLElement:
    """x ↦ x."""
    return PLElement(((Fraction(0), Fraction(0)),))


def pl_translation(c: Fraction | int) -> PLElement:
    """x ↦ x + c; ``pl_translation(1)`` is z."""
    return PLElement(((Fraction(0), Fraction(c)),))


def pl_inverse(phi: PLElement) -> PLElement:
    """φ⁻¹, obtained by swapping coordinates."""
    return pl_from_points((y, x) for x, y in phi.breakpoints)


def pl_compose(phi: PLElement, psi: PLElement) -> PLElement:
    """Apply φ then ψ, i.e. ψ∘φ."""
    phi_inv = pl_inverse(phi)
    xs = {Fraction(0)} | {x for x, _ in phi.breakpoints}
    for x_psi, _ in psi.breakpoints:
        pre = pl_eval(phi_inv, x_psi)
        xs.add(pre - math.floor(pre))
    return pl_from_points((x, pl_eval(psi, pl_eval(phi, x))) for x in sorted(xs))


def dense_sequence() -> Iterator[Fraction]:
    """0, 1/2, 1/3, 2/3, 1/4, 3/4, …: reduced fractions of [0, 1) by denominator, then numerator."""
    yield Fraction(0)
    q = 2
    while True:
        for p in range(1, q):
            if math.gcd(p, q) == 1:
                yield Fraction(p, q)
        q += 1


def _first_dense_in(a: Fraction, b: Fraction) -> Fraction:
    """First element of ``dense_sequence`` in the open interval (a, b)."""
    q = 1
    while True:
        p = math.floor(a * q) + 1
        if Fraction(p, q) < b:
            return Fraction(p, q)
        q += 1


def first_moved_point(h: PLElement) -> Fraction | None:
    """First x_n of ``dense_sequence`` with h(x_n) ≠ x_n, or None for the identity.

    Computed from the fixed-point set of h: between consecutive zeros of
    h(x) − x the first sequence element is the fraction of least denominator.
    """
    if pl_eval(h, 0) != 0:
        return Fraction(0)

    cuts = {Fraction(0), Fraction(1)}
    for (x0, y0), (x1, y1) in pairwise(_closed(h.breakpoints)):
        d0, d1 = y0 - x0, y1 - x1
        if d0 == 0:
            cuts.add(x0)
        if d1 == 0:
            cuts.add(x1)
        if d0 * d1 < 0:
            cuts.add(x0 + d0 * (x1 - x0) / (d0 - d1))

    best: Fraction | None = None
    for a, b in pairwise(sorted(cuts)):
        mid = (a + b) / 2
        if pl_eval(h, mid) == mid:
            continue
        candidate = _first_dense_in(a, b)
        if best is None or (candidate.denominator, candidate.numerator) < (best.denominator, best.numerator):
            best = candidate
    return best


def pl_compare(phi: PLElement, psi: PLElement) -> int:
    """Left order: φ < ψ iff φ⁻¹ψ moves its first moved point upward."""
    if phi == psi:
        return 0
    h = pl_compose(psi, pl_inverse(phi))
    x = first_moved_point(h)
    if x is None:
        return 0
    return -1 if pl_eval(h, x) > x else 1


def noncommuting_pair() -> tuple[PLElement, PLElement]:
    """φ with a kink at 1/2 and the half translation; φψ ≠ ψφ."""
    phi = PLElement(((Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(1, 4))))
    psi = pl_translation(Fraction(1, 2))
    return phi, psi


@dataclass(frozen=True)
class PLGroup(OrderedGroup):
    """Homéomorphismes PL périodiques, produit (ab)(x) = a(b(x)), z la translation de 1."""

    @property
    def name(self) -> str:
        """Return ``pl``."""
        return "pl"

    @property
    def identity(self) -> PLElement:
        """x ↦ x."""
        return pl_identity()

    @property
    def z(self) -> PLElement:
        """x ↦ x + 1."""
        return pl_translation(1)

    def mul(self, a: PLElement, b: PLElement) -> PLElement:
        """a∘b."""
        return pl_compose(b, a)

    def inverse(self, a: PLElement) -> PLElement:
        """a⁻¹."""
        return pl_inverse(a)

    def compare(self, a: PLElement, b: PLElement) -> int:
        """Dense-sequence left order."""
        return pl_compare(a, b)

    def contains(self, x: object) -> bool:
        """True for PL elements."""
        return isinstance(x, PLElement)

    def sample(self, rng: random.Random) -> PLElement:
        """Random element with a few breakpoints of small denominator."""
        extra = rng.randint(0, PL_SAMPLE_MAX_BREAKPOINTS)
        xs = sorted({Fraction(0)} | {random_unit_fraction(rng, PL_SAMPLE_MAX_DENOMINATOR) for _ in range(extra)})
        weights = random_weights(rng, len(xs))
        span = Fraction(SAMPLE_INTEGER_SPAN)
        y = random_fraction(rng, -span, span, PL_SAMPLE_MAX_DENOMINATOR)
        points = []
        for x, w in zip(xs, weights, strict=True):
            points.append((x, y))
            y += w
        return pl_from_points(points)
