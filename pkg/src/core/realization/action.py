"""Action à droite de |C|_p sur la réalisation |S|_p d'un ensemble cyclique."""

from src.core.categories.cyclic import tau_power
from src.core.cyclic_sets.constructions import circle_set
from src.core.cyclic_sets.finite_sets import FiniteCyclicSet
from src.core.dtos import AuditReportDTO
from src.core.exceptions import CompositionError
from src.core.intervals.sequences import MonotoneSeq
from src.core.intervals.structures import CyclicStructure
from src.core.realization.circle import (
    CirclePoint,
    circle_identity,
    circle_inverse,
    circle_mul,
    iota,
    iota_inverse,
    sample_circle_point,
)
from src.core.realization.reduce import RealizationPoint, realize_reduce
from src.core.sampling import make_rng
from src.utils.config import DEFAULT_SAMPLES, DEFAULT_SEED
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _insert(beta: MonotoneSeq, g: CirclePoint) -> tuple[MonotoneSeq, int, bool]:
    """Common refinement of β and g.

    Returns:
        (u, a, lifted) with u_a = g; ``lifted`` is False when g already is a value of β

    """
    interval = beta.interval
    for a, value in enumerate(beta.values):
        order = interval.compare(g.value, value)
        if order == 0:
            return beta, a, False
        if order < 0:
            values = beta.values[:a] + (g.value,) + beta.values[a:]
            return MonotoneSeq(interval, beta.rank + 1, values), a, True
    raise CompositionError(f"{g} is not below the top of {interval.name}")


def right_action(p: RealizationPoint, g: CirclePoint, cs: CyclicStructure) -> RealizationPoint:
    """p ◁ g = (x·τ^{−a}, τ^a_* u) where (x, u) lifts p and (τ^a, u) lifts g.

    Raises:
        CompositionError: If the space of ``p`` is not a cyclic set

    """
    s = p.space
    if not isinstance(s, FiniteCyclicSet):
        raise CompositionError("The circle only acts on realizations of cyclic sets")
    p = realize_reduce(p)
    u, a, lifted = _insert(p.sequence, g)
    x, m = p.cell, p.level
    if lifted:
        x, m = s.degeneracy(x, m, a - 1), m + 1
    rotated_cell = s.act_lambda(x, m, tau_power(m, -a))
    rotated_seq = cs.act(tau_power(m, a), u)
    logger.debug("[ACTION] %s ◁ %s lifted to level %d with a = %d", p, g, m, a)
    return realize_reduce(RealizationPoint(s, m, rotated_cell, rotated_seq))


def right_action_audit(
    cs: CyclicStructure, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> AuditReportDTO:
    """Check p◁1 = p, (p◁g)◁h = p◁(g·h) and ι(p◁g) = g⁻¹·ι(p) on S = C."""
    rng = make_rng(seed)
    space = circle_set()
    one = circle_identity(cs)
    failures: list[str] = []
    for _ in range(samples):
        x, g, h = (sample_circle_point(cs, rng) for _ in range(3))
        p = iota_inverse(x, space=space)
        if right_action(p, one, cs).key != p.key:
            failures.append(f"{p} ◁ 1 is not {p}")
        left = right_action(right_action(p, g, cs), h, cs)
        right = right_action(p, circle_mul(g, h, cs), cs)
        if left.key != right.key:
            failures.append(f"(p ◁ {g}) ◁ {h} != p ◁ ({g}·{h}) for p = {p}")
        if iota(right_action(p, g, cs)) != circle_mul(circle_inverse(g, cs), x, cs):
            failures.append(f"ι(p ◁ {g}) is not {g}⁻¹·{x}")
    if failures:
        logger.warning("[AUDIT] right action on %s: %d failures", cs.name, len(failures))
    logger.info("[AUDIT] right action on %s: %d sampled triples", cs.name, samples)
    return AuditReportDTO(name=f"right-action:{cs.interval.name}", checked=samples, failures=tuple(failures))
