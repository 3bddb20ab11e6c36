"""Cercles abstraits C = (P, S, ∂_0, ∂_1, 0, 1, *, ∪).

Finite circles are stored with explicit tables. Quotients X/θ of
finite-period archimedean sets use positions: points are 0..p−1 and a
segment is the pair (x, y) with 0 ≤ x < p and x ≤ y ≤ x + p.
"""

from collections.abc import Hashable, Iterator
from dataclasses import dataclass, field
from itertools import product

from src.core.circles.archimedean import ArcMorphism, ArchimedeanSet, arc_eval
from src.core.dtos import AuditReportDTO
from src.core.exceptions import CircleAxiomError
from src.core.intervals.interval import ChainInterval
from src.utils.logger import get_logger

logger = get_logger(__name__)

Label = Hashable
PointMap = dict[Label, Label]
SegmentMap = dict[Label, Label]


@dataclass(frozen=True)
class AbstractCircle:
    """Points, segments orientés et leurs applications de structure."""

    points: tuple[Label, ...]
    segments: tuple[Label, ...]
    d0: dict[Label, Label] = field(compare=False)
    d1: dict[Label, Label] = field(compare=False)
    zero: dict[Label, Label] = field(compare=False)
    one: dict[Label, Label] = field(compare=False)
    star: dict[Label, Label] = field(compare=False)
    cup: dict[tuple[Label, Label], Label] = field(compare=False)

    def segments_between(self, x: Label, y: Label) -> list[Label]:
        """Segments a with ∂_0 a = x and ∂_1 a = y."""
        return [a for a in self.segments if self.d0[a] == x and self.d1[a] == y]

    def starting_at(self, x: Label) -> list[Label]:
        """L_x = {a : ∂_0 a = x}."""
        return [a for a in self.segments if self.d0[a] == x]

    def __repr__(self) -> str:
        """Sizes only."""
        return f"<AbstractCircle(|P|={len(self.points)}, |S|={len(self.segments)})>"


def _normalize(x: int, y: int, p: int) -> tuple[int, int]:
    shift = (x // p) * p
    return x - shift, y - shift


def quotient_circle(x_set: ArchimedeanSet) -> AbstractCircle:
    """X/θ for a finite-period archimedean set."""
    p = x_set.period
    points = tuple(range(p))
    segments = tuple((x, y) for x in points for y in range(x, x + p + 1))
    d0 = {s: s[0] for s in segments}
    d1 = {s: s[1] % p for s in segments}
    zero = {x: (x, x) for x in points}
    one = {x: (x, x + p) for x in points}
    star = {(x, y): _normalize(y, x + p, p) for x, y in segments}
    cup: dict[tuple[Label, Label], Label] = {}
    for a, b in product(segments, repeat=2):
        (x, y), (y2, z2) = a, b
        if (y - y2) % p:
            continue
        z = z2 + (y - y2)
        if z <= x + p:
            cup[(a, b)] = (x, z)
    logger.debug("[CIRCLE] quotient of %s: %d points, %d segments", x_set.name, len(points), len(segments))
    return AbstractCircle(points, segments, d0, d1, zero, one, star, cup)


def circle_axiom_audit(c: AbstractCircle) -> AuditReportDTO:
    """Exhaustive check of the non-triviality, equational and concatenation axioms."""
    failures: list[str] = []
    checked = 0

    def check(ok: bool, axiom: str, witness: str) -> None:
        nonlocal checked
        checked += 1
        if not ok:
            failures.append(f"axiom {axiom}: {witness}")

    check(bool(c.points), "1", "P is empty")
    for x, y in product(c.points, repeat=2):
        check(bool(c.segments_between(x, y)), "1", f"no segment from {x!r} to {y!r}")
    for x in c.points:
        check(c.zero[x] != c.one[x], "1", f"0_{x!r} = 1_{x!r}")
        check(c.d0[c.zero[x]] == x == c.d1[c.zero[x]], "2", f"∂(0_{x!r}) ≠ {x!r}")
        check(c.star[c.zero[x]] == c.one[x], "2", f"0_{x!r}* ≠ 1_{x!r}")
    for a in c.segments:
        check(c.star[c.star[a]] == a, "2", f"{a!r}** ≠ {a!r}")
        check(c.d0[c.star[a]] == c.d1[a], "2", f"∂_0({a!r}*) ≠ ∂_1({a!r})")
        x = c.d0[a]
        if c.d1[a] == x:
            check(a in (c.zero[x], c.one[x]), "2", f"loop {a!r} is neither 0_{x!r} nor 1_{x!r}")
        check(c.cup.get((c.zero[x], a)) == a, "3.5", f"0_{x!r} ∪ {a!r} ≠ {a!r}")

    for a, b in product(c.segments, repeat=2):
        ab = c.cup.get((a, b))
        if ab is not None:
            check(c.d1[a] == c.d0[b], "3.1", f"{a!r} ∪ {b!r} defined with ∂_1 a ≠ ∂_0 b")
            check(c.d0[ab] == c.d0[a] and c.d1[ab] == c.d1[b], "3.1", f"endpoints of {a!r} ∪ {b!r}")
            for x in c.points:
                if ab == c.zero[x]:
                    check(a == c.zero[x], "3.4", f"{a!r} ∪ {b!r} = 0_{x!r}")
            for d in c.segments:
                abd = c.cup.get((ab, d))
                if abd is None:
                    continue
                bd = c.cup.get((b, d))
                check(bd is not None and c.cup.get((a, bd)) == abd, "3.3", f"({a!r} ∪ {b!r}) ∪ {d!r}")
        elif c.d1[a] == c.d0[b]:
            check((c.star[b], c.star[a]) in c.cup, "3.6", f"neither {a!r} ∪ {b!r} nor {b!r}* ∪ {a!r}*")
        for d in c.segments:
            left = ab == d
            right = c.cup.get((c.star[d], a)) == c.star[b]
            check(left == right, "3.2", f"a={a!r}, b={b!r}, c={d!r}")

    if failures:
        logger.warning("[AUDIT] %r: %d axiom failures", c, len(failures))
    logger.info("[AUDIT] %r: %d axiom instances", c, checked)
    return AuditReportDTO(name="circle-axioms", checked=checked, failures=tuple(failures))


def subtract_order(c: AbstractCircle, x: Label) -> list[Label]:
    """L_x sorted by a ≤ b ⟺ ∃ d, a ∪ d = b."""

    def below(a: Label, b: Label) -> bool:
        return any(c.cup.get((a, d)) == b for d in c.segments)

    segments = c.starting_at(x)
    return sorted(segments, key=lambda b: sum(1 for a in segments if below(a, b)))


def _require_circle(c: AbstractCircle) -> None:
    report = circle_axiom_audit(c)
    if not report.passed:
        raise CircleAxiomError("Not an abstract circle", details="; ".join(report.failures[:5]))


def reconstruct(c: AbstractCircle, x: Label) -> ArchimedeanSet:
    """X_x = (ℤ × L_x)/∼ with (n+1, 0_x) ∼ (n, 1_x).

    Raises:
        CircleAxiomError: If ``c`` fails the axiom audit

    """
    _require_circle(c)
    return ArchimedeanSet(ChainInterval(tuple(subtract_order(c, x))))


def reconstruction_map(c: AbstractCircle, x: Label) -> tuple[ArchimedeanSet, PointMap, SegmentMap]:
    """X_x and the pair (p, s) identifying X_x/θ_x with ``c``.

    Raises:
        CircleAxiomError: If ``c`` fails the axiom audit or a segment has no preimage

    """
    x_set = reconstruct(c, x)
    quotient = quotient_circle(x_set)
    pmap = {q: c.d1[x_set.element_at(q).f] for q in quotient.points}
    smap: SegmentMap = {}
    for alpha, beta in quotient.segments:
        first, second = x_set.element_at(alpha), x_set.element_at(beta)
        a, b = first.f, second.f
        if second.k == first.k:
            matches = [d for d in c.segments if c.cup.get((a, d)) == b]
            if not matches:
                raise CircleAxiomError(f"No segment completes {a!r} to {b!r}")
            smap[(alpha, beta)] = matches[0]
        else:
            smap[(alpha, beta)] = c.cup[(c.star[a], b)]
    return x_set, pmap, smap


def is_circle_morphism(c: AbstractCircle, d: AbstractCircle, pmap: PointMap, smap: SegmentMap) -> bool:
    """True when the maps commute with ∂_0, ∂_1, 0, 1, * and ∪."""
    for a in c.segments:
        h = smap[a]
        if d.d0[h] != pmap[c.d0[a]] or d.d1[h] != pmap[c.d1[a]] or d.star[h] != smap[c.star[a]]:
            return False
    for x in c.points:
        if smap[c.zero[x]] != d.zero[pmap[x]] or smap[c.one[x]] != d.one[pmap[x]]:
            return False
    return all(d.cup.get((smap[a], smap[b])) == smap[ab] for (a, b), ab in c.cup.items())


def is_circle_isomorphism(c: AbstractCircle, d: AbstractCircle, pmap: PointMap, smap: SegmentMap) -> bool:
    """Bijective morphism whose inverse maps are a morphism d → c as well."""
    if set(pmap.values()) != set(d.points) or len(set(pmap.values())) != len(c.points):
        return False
    if set(smap.values()) != set(d.segments) or len(set(smap.values())) != len(c.segments):
        return False
    if not is_circle_morphism(c, d, pmap, smap):
        return False
    pmap_inverse = {v: k for k, v in pmap.items()}
    smap_inverse = {v: k for k, v in smap.items()}
    return is_circle_morphism(d, c, pmap_inverse, smap_inverse)


def basepoint_iso(c: AbstractCircle, x: Label, y: Label) -> ArcMorphism:
    """ψ_xy: X_y → X_x, (n, b) ↦ (n, v ∪ b), or (n+1, (b* ∪ v*)*) when v ∪ b is undefined.

    v is the segment from x to y (0_x when x = y).
    """
    x_set, y_set = reconstruct(c, x), reconstruct(c, y)
    v = c.zero[x] if x == y else c.segments_between(x, y)[0]
    chain = x_set.fiber
    p_x = x_set.period
    values = []
    for r in range(y_set.period):
        b = y_set.element_at(r).f
        if (v, b) in c.cup:
            values.append(chain.index(c.cup[(v, b)]))
        else:
            values.append(p_x + chain.index(c.star[c.cup[(c.star[b], c.star[v])]]))
    logger.debug("[CIRCLE] ψ_%r%r = %s", x, y, values)
    return ArcMorphism(y_set, x_set, tuple(values))


def quotient_morphism(f: ArcMorphism) -> tuple[PointMap, SegmentMap]:
    """Image of an Arc morphism under X ↦ X/θ."""
    p, q = f.source.period, f.target.period
    source = quotient_circle(f.source)
    pmap = {x: arc_eval(f, x) % q for x in source.points}
    smap = {(x, y): _normalize(arc_eval(f, x), arc_eval(f, y), q) for x, y in source.segments}
    logger.debug("[CIRCLE] quotient of a morphism with periods %d → %d", p, q)
    return pmap, smap


def enumerate_circle_morphisms(c: AbstractCircle, d: AbstractCircle) -> Iterator[tuple[PointMap, SegmentMap]]:
    """All morphisms c → d by backtracking over point maps and star pairs."""
    pairs: list[Label] = []
    seen: set[Label] = set()
    for a in c.segments:
        if a not in seen:
            pairs.append(a)
            seen.update((a, c.star[a]))

    for images in product(d.points, repeat=len(c.points)):
        pmap = dict(zip(c.points, images, strict=True))

        def extend(i: int, smap: SegmentMap) -> Iterator[SegmentMap]:
            if i == len(pairs):
                yield dict(smap)
                return
            a = pairs[i]
            for h in d.segments_between(pmap[c.d0[a]], pmap[c.d1[a]]):
                forced = {a: h, c.star[a]: d.star[h]}
                if any(smap.get(k, v) != v for k, v in forced.items()):
                    continue
                yield from extend(i + 1, {**smap, **forced})

        for smap in extend(0, {}):
            if is_circle_morphism(c, d, pmap, smap):
                yield pmap, smap
