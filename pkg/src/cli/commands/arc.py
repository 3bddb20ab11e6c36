"""Verbes ``arc quotient|reconstruct|audit|psi`` sur les cercles abstraits."""

import argparse
from collections.abc import Hashable

from src.cli.context import CommandContext, add_common_options
from src.cli.formatters import dump_json, emit_result
from src.core.circles.abstract_circle import (
    AbstractCircle,
    basepoint_iso,
    is_circle_isomorphism,
    quotient_circle,
    reconstruction_map,
)
from src.core.circles.archimedean import interval_to_arch
from src.core.exceptions import CyclicValidationError
from src.core.intervals.interval import FiniteInterval
from src.core.io.codec import circle_from_json, circle_to_json
from src.core.validator import InputValidator
from src.utils.config import EXIT_AUDIT_FAILURE, EXIT_SUCCESS
from src.utils.logger import get_logger

logger = get_logger(__name__)


def resolve_circle(ctx: CommandContext) -> AbstractCircle:
    """Quotient de ``--fiber finite:n``, ou cercle lu en JSON.

    Raises:
        CyclicValidationError: Si aucun des deux, ou les deux, sont donnés

    """
    fiber, source = getattr(ctx.args, "fiber", None), getattr(ctx.args, "circle", None)
    if (fiber is None) == (source is None):
        raise CyclicValidationError("Give either a circle file or --fiber finite:<n>")
    if fiber is not None:
        return quotient_circle(interval_to_arch(FiniteInterval(InputValidator.validate_fiber(fiber))))
    return circle_from_json(ctx.payload(source))


def _point(c: AbstractCircle, label: str) -> Hashable:
    for x in c.points:
        if str(x) == label:
            return x
    raise CyclicValidationError(f"{label!r} is not a point of the circle")


def _quotient(ctx: CommandContext) -> int:
    c = resolve_circle(ctx)
    if ctx.fmt == "json":
        ctx.write(dump_json(circle_to_json(c)))
    else:
        ctx.write(f"points: {len(c.points)}\nsegments: {len(c.segments)}\ncup entries: {len(c.cup)}")
    return EXIT_SUCCESS


def _reconstruct(ctx: CommandContext) -> int:
    c = resolve_circle(ctx)
    base = _point(c, ctx.args.base)
    x_set, pmap, smap = reconstruction_map(c, base)
    iso = is_circle_isomorphism(quotient_circle(x_set), c, pmap, smap)
    chain = [str(a) for a in x_set.fiber.elements()]
    if ctx.fmt == "json":
        ctx.write(dump_json({"base": str(base), "period": x_set.period, "chain": chain, "isomorphism": iso}))
    else:
        ctx.write(f"base: {base}\nperiod: {x_set.period}\nchain: {' < '.join(chain)}\nisomorphism: {iso}")
    return EXIT_SUCCESS if iso else EXIT_AUDIT_FAILURE


def _audit(ctx: CommandContext) -> int:
    return emit_result(ctx.facade.circle_audit(resolve_circle(ctx)), ctx.fmt, ctx.out)


def _psi(ctx: CommandContext) -> int:
    c = resolve_circle(ctx)
    x, y = _point(c, ctx.args.x), _point(c, ctx.args.y)
    psi = basepoint_iso(c, x, y)
    if ctx.fmt == "json":
        ctx.write(dump_json({"source": str(y), "target": str(x), "values": list(psi.values)}))
    else:
        ctx.write(f"ψ_{x}{y}: {list(psi.values)}")
    return EXIT_SUCCESS


def register(subparsers: argparse._SubParsersAction) -> None:
    """Ajoute le groupe de verbes ``arc``."""
    group = subparsers.add_parser("arc", help="Ensembles archimédiens et cercles abstraits").add_subparsers(
        dest="verb", required=True
    )
    handlers = {
        "quotient": (_quotient, "Cercle X/θ"),
        "reconstruct": (_reconstruct, "X_x et l'isomorphisme X_x/θ_x ≅ C"),
        "audit": (_audit, "Axiomes du cercle abstrait"),
        "psi": (_psi, "Isomorphisme ψ_xy: X_y → X_x"),
    }
    for verb, (handler, help_text) in handlers.items():
        parser = group.add_parser(verb, help=help_text)
        parser.add_argument("circle", nargs="?", help="Fichier JSON, JSON en ligne ou '-'")
        parser.add_argument("--fiber", help="Fibre finite:<n>")
        if verb == "reconstruct":
            parser.add_argument("--base", required=True, help="Point de base x")
        if verb == "psi":
            parser.add_argument("x")
            parser.add_argument("y")
        add_common_options(parser)
        parser.set_defaults(handler=handler)
