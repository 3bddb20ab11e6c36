"""Le groupe |C|_p = I/(b ∼ t), sa loi, son 2-cocycle et la forme ω.

Circle points are interval elements u with b ≤ u < t; the glued class of the
endpoints is represented by b.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from src.core.categories.cyclic import delta_lambda_decompose, tau_power
from src.core.cyclic_sets.constructions import POINT, circle_set
from src.core.cyclic_sets.finite_sets import FiniteSimplicialSet
from src.core.dtos import AuditReportDTO
from src.core.exceptions import InvalidSequenceError
from src.core.intervals.interval import Interval
from src.core.intervals.sequences import MonotoneSeq, make_sequence
from src.core.intervals.structures import CyclicStructure
from src.core.realization.reduce import RealizationPoint, realize_reduce
from src.core.sampling import make_rng
from src.utils.config import DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TRUNCATION
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class CirclePoint:
    """Classe de ``value`` dans I/(b ∼ t), avec b ≤ value < t."""

    interval: Interval
    value: Any

    def __post_init__(self) -> None:
        """Reject values outside [b, t)."""
        if not self.interval.contains(self.value) or not self.interval.lt(self.value, self.interval.top):
            raise InvalidSequenceError(f"{self.value!r} is not in [b, t) of {self.interval.name}")

    def __str__(self) -> str:
        """The representative value."""
        return str(self.value)


def circle_point(interval: Interval, u: Any) -> CirclePoint:
    """Class of any u ∈ I; the top t is sent to b."""
    if interval.compare(u, interval.top) == 0:
        u = interval.bottom
    return CirclePoint(interval, u)


def is_base(x: CirclePoint) -> bool:
    """True for the glued class of b and t."""
    return x.interval.compare(x.value, x.interval.bottom) == 0


def sample_circle_point(cs: CyclicStructure, rng: Any) -> CirclePoint:
    """Draw a circle point from the interval sampler."""
    return circle_point(cs.interval, cs.interval.sample_element(rng))


def iota(p: RealizationPoint) -> CirclePoint:
    """ι(τ^a, w) = w(a) for a point of |C|_p."""
    _, gamma = p.cell  # type: ignore[misc]
    _, a = delta_lambda_decompose(gamma)
    return circle_point(p.sequence.interval, p.sequence[a])


def iota_inverse(
    x: CirclePoint, truncation: int = DEFAULT_TRUNCATION, space: FiniteSimplicialSet | None = None
) -> RealizationPoint:
    """Canonical point of |C|_p over ``x``: the base point, or (τ_1, (b, x, t)) at level 1."""
    c = space or circle_set(truncation)
    interval = x.interval
    if is_base(x):
        return RealizationPoint(c, 0, (POINT, tau_power(0, 0)), make_sequence(interval, ()))
    return RealizationPoint(c, 1, (POINT, tau_power(1, 1)), make_sequence(interval, (x.value,)))


def tau_1(x: CirclePoint, cs: CyclicStructure) -> Any:
    """τ_1(x) = τ(b, x, t)_1, a value of the interval (t for x = b)."""
    return cs.tau_n(make_sequence(cs.interval, (x.value,)))[1]


def _rank2(cs: CyclicStructure, u: Any, v: Any) -> MonotoneSeq:
    return make_sequence(cs.interval, (u, v))


def circle_identity(cs: CyclicStructure) -> CirclePoint:
    """Class of b."""
    return CirclePoint(cs.interval, cs.interval.bottom)


def circle_mul(x: CirclePoint, y: CirclePoint, cs: CyclicStructure) -> CirclePoint:
    """Group law of |C|_p.

    x·y = τ(b, τ_1x, y, t)_1 when τ_1x ≤ y, and τ²(b, y, τ_1x, t)_2 otherwise.
    """
    interval = cs.interval
    u = tau_1(x, cs)
    if interval.le(u, y.value):
        value = cs.tau_n(_rank2(cs, u, y.value))[1]
    else:
        value = cs.rotate(_rank2(cs, y.value, u), 2)[2]
    return circle_point(interval, value)


def circle_inverse(x: CirclePoint, cs: CyclicStructure) -> CirclePoint:
    """x⁻¹ = τ_1(x) for x ≠ b."""
    if is_base(x):
        return x
    return circle_point(cs.interval, tau_1(x, cs))


def cocycle(x: CirclePoint, y: CirclePoint, cs: CyclicStructure) -> int:
    """Carry c(x, y): 1 when τ_1x ≤ y, normalized by c(b, ·) = c(·, b) = 0."""
    if is_base(x) or is_base(y):
        return 0
    return int(cs.interval.le(tau_1(x, cs), y.value))


def rho(x: CirclePoint, y: CirclePoint) -> int:
    """ρ(x, y) = [x ≤ y] away from the base point."""
    if is_base(x) or is_base(y):
        return 0
    return int(x.interval.le(x.value, y.value))


def invariant_cocycle(w0: CirclePoint, w1: CirclePoint, w2: CirclePoint, cs: CyclicStructure) -> int:
    """c̃(w0, w1, w2) = c(w0⁻¹w1, w1⁻¹w2)."""
    g1 = circle_mul(circle_inverse(w0, cs), w1, cs)
    g2 = circle_mul(circle_inverse(w1, cs), w2, cs)
    return cocycle(g1, g2, cs)


def omega(x: CirclePoint, y: CirclePoint, z: CirclePoint) -> int:
    """ω(x, y, z): 0 when y lies on the positive arc from x to z, 1 otherwise.

    ω vanishes when x = y or y = z.
    """
    interval = x.interval
    xv, yv, zv = x.value, y.value, z.value
    if interval.compare(xv, yv) == 0 or interval.compare(yv, zv) == 0:
        return 0
    if interval.lt(xv, zv):
        return 0 if interval.le(xv, yv) and interval.le(yv, zv) else 1
    if interval.lt(zv, xv):
        return 1 if interval.le(zv, yv) and interval.le(yv, xv) else 0
    return 1


def ell(x: Fraction, y: Fraction) -> Fraction:
    """ℓ(x, y) = y − x if x ≤ y, else 1 − (x − y)."""
    return y - x if x <= y else 1 - (x - y)


def left_translation_to(u: CirclePoint, v: CirclePoint, cs: CyclicStructure) -> CirclePoint:
    """Element g with g·u = v."""
    return circle_mul(v, circle_inverse(u, cs), cs)


def cocycle_identity_audit(
    cs: CyclicStructure, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> AuditReportDTO:
    """Check Σ_j (−1)^j c̃(w_0, …, ŵ_j, …, w_3) = 0 on sampled quadruples."""
    rng = make_rng(seed)
    failures = []
    for _ in range(samples):
        w = [sample_circle_point(cs, rng) for _ in range(4)]
        total = sum((-1) ** j * invariant_cocycle(*(w[:j] + w[j + 1 :]), cs) for j in range(4))
        if total:
            failures.append(f"alternating sum {total} on ({', '.join(map(str, w))})")
    if failures:
        logger.warning("[AUDIT] cocycle identity on %s: %d failures", cs.name, len(failures))
    logger.info("[AUDIT] cocycle identity on %s: %d quadruples", cs.name, samples)
    return AuditReportDTO(name=f"cocycle-identity:{cs.interval.name}", checked=samples, failures=tuple(failures))


def circle_group_audit(
    cs: CyclicStructure, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> AuditReportDTO:
    """Associativity, identity and inverses of the circle law, and c(x, y) = ρ(x⁻¹, y), on samples."""
    rng = make_rng(seed)
    one = circle_identity(cs)
    failures: list[str] = []
    for _ in range(samples):
        x, y, z = (sample_circle_point(cs, rng) for _ in range(3))
        if circle_mul(circle_mul(x, y, cs), z, cs) != circle_mul(x, circle_mul(y, z, cs), cs):
            failures.append(f"associativity fails on {x}, {y}, {z}")
        if circle_mul(one, x, cs) != x or circle_mul(x, one, cs) != x:
            failures.append(f"identity fails on {x}")
        if circle_mul(x, circle_inverse(x, cs), cs) != one:
            failures.append(f"inverse fails on {x}")
        if cocycle(x, y, cs) != rho(circle_inverse(x, cs), y):
            failures.append(f"c(x, y) != ρ(x⁻¹, y) on {x}, {y}")
    if failures:
        logger.warning("[AUDIT] circle law on %s: %d failures", cs.name, len(failures))
    logger.info("[AUDIT] circle law on %s: %d sampled triples", cs.name, samples)
    return AuditReportDTO(name=f"circle-group:{cs.interval.name}", checked=samples, failures=tuple(failures))


def reduce_on_circle(p: RealizationPoint) -> CirclePoint:
    """ι of the canonical form of ``p``."""
    return iota(realize_reduce(p))
