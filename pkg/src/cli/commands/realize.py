"""Verbes ``realize reduce|act|check`` sur la réalisation du cercle C."""

import argparse
from fractions import Fraction
from typing import Any

from src.cli.context import CommandContext, add_common_options
from src.cli.formatters import dump_json, emit_result
from src.core.categories.cyclic import tau_power
from src.core.cyclic_sets.constructions import POINT, circle_set
from src.core.exceptions import CyclicValidationError
from src.core.groups.piecewise_linear import PLGroup
from src.core.intervals.interval import FiniteInterval, GroupInterval, Interval, RationalUnit
from src.core.intervals.sequences import MonotoneSeq
from src.core.intervals.structures import CyclicStructure
from src.core.io.codec import cell_label, pl_from_json, sequence_to_json, value_to_json
from src.core.io.loader import is_payload_reference
from src.core.realization.action import right_action
from src.core.realization.circle import CirclePoint, circle_point, iota, iota_inverse
from src.core.realization.reduce import RealizationPoint, realize_reduce
from src.core.validator import InputValidator
from src.utils.config import (
    CANONICAL_CHECK_INTERVAL_RANK,
    CANONICAL_CHECK_TRUNCATION,
    DEFAULT_TRUNCATION,
    EXIT_SUCCESS,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


def interval_value(interval: Interval, q: Fraction) -> Any:
    """Élément d'un intervalle fini ou rationnel donné par un rationnel exact.

    Raises:
        CyclicValidationError: Pour une valeur non entière sur un intervalle fini, et pour les autres intervalles

    """
    if isinstance(interval, FiniteInterval):
        if q.denominator != 1:
            raise CyclicValidationError(f"{q} is not an element of {interval.name}")
        return int(q)
    if isinstance(interval, RationalUnit):
        return q
    raise CyclicValidationError(f"Values of {interval.name} cannot be given here; use finite:<n> or rational")


def structure(ctx: CommandContext) -> CyclicStructure:
    """Structure cyclique du modèle ``--model``."""
    return ctx.facade.structure_of(ctx.model)


def parse_circle_point(ctx: CommandContext, cs: CyclicStructure, text: str) -> CirclePoint:
    """Point du cercle lu depuis ``p/q``, ou depuis un élément PL en JSON pour le modèle ``pl``.

    Le sommet t est identifié à la base b.

    Raises:
        CyclicValidationError: Si un point PL n'est pas donné en JSON

    """
    interval = cs.interval
    if isinstance(interval, GroupInterval) and isinstance(interval.group, PLGroup):
        if not is_payload_reference(text):
            raise CyclicValidationError(f"Points of {interval.name} are PL elements given as JSON breakpoints")
        return circle_point(interval, pl_from_json(ctx.payload(text)))
    return circle_point(interval, interval_value(interval, InputValidator.validate_rational(text)))


def render_point(ctx: CommandContext, p: RealizationPoint) -> None:
    """Affiche le point canonique et son image sur le cercle."""
    x = iota(p)
    if ctx.fmt == "json":
        payload = {
            "level": p.level,
            "cell": cell_label(p.cell),
            "sequence": sequence_to_json(p.sequence),
            "circle": value_to_json(x.interval, x.value),
        }
        ctx.write(dump_json(payload))
    else:
        ctx.write(f"canonical: {cell_label(p.cell)} {tuple(str(v) for v in p.sequence.values)}\ncircle: {x}")


def _reduce(ctx: CommandContext) -> int:
    cs = structure(ctx)
    values = tuple(interval_value(cs.interval, q) for q in InputValidator.validate_values(ctx.args.values))
    rank = len(values) - 2
    if rank < 0:
        raise CyclicValidationError("--values needs the two endpoints b and t")
    a = InputValidator.validate_int(ctx.args.rotation, "--rotation", 0, rank)
    space = circle_set(max(DEFAULT_TRUNCATION, rank))
    point = RealizationPoint(space, rank, (POINT, tau_power(rank, a)), MonotoneSeq(cs.interval, rank, values))
    render_point(ctx, realize_reduce(point))
    return EXIT_SUCCESS


def _act(ctx: CommandContext) -> int:
    cs = structure(ctx)
    x, g = parse_circle_point(ctx, cs, ctx.args.x), parse_circle_point(ctx, cs, ctx.args.g)
    render_point(ctx, right_action(iota_inverse(x), g, cs))
    return EXIT_SUCCESS


def _check(ctx: CommandContext) -> int:
    truncation = InputValidator.validate_truncation(ctx.args.truncation)
    rank = InputValidator.validate_int(ctx.args.rank, "--rank", 0, CANONICAL_CHECK_INTERVAL_RANK + 2)
    return emit_result(ctx.facade.canonical_form_check(truncation, rank), ctx.fmt, ctx.out)


def register(subparsers: argparse._SubParsersAction) -> None:
    """Ajoute le groupe de verbes ``realize``."""
    group = subparsers.add_parser("realize", help="Réalisation |C|_p").add_subparsers(dest="verb", required=True)

    reduce_parser = group.add_parser("reduce", help="Forme canonique de ((*, τ^a), β)")
    reduce_parser.add_argument("--rotation", default="0", help="Exposant a de τ_n^a")
    reduce_parser.add_argument("--values", required=True, help="β_0,…,β_{n+1} séparés par des virgules")
    add_common_options(reduce_parser, "model")
    reduce_parser.set_defaults(handler=_reduce)

    act = group.add_parser("act", help="Action à droite x ◁ g")
    act.add_argument("x")
    act.add_argument("g")
    add_common_options(act, "model")
    act.set_defaults(handler=_act)

    check = group.add_parser("check", help="Formes canoniques contre la clôture")
    check.add_argument("--truncation", default=str(CANONICAL_CHECK_TRUNCATION))
    check.add_argument("--rank", default=str(CANONICAL_CHECK_INTERVAL_RANK), help="Intervalle fini n*")
    add_common_options(check)
    check.set_defaults(handler=_check)
