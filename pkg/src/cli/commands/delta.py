"""Verbes ``delta compose|factor|dual|audit``."""

import argparse

from src.cli.context import CommandContext, add_common_options
from src.cli.formatters import dump_json, emit_result, render_morphism
from src.core.categories.delta import delta_compose, delta_dual, epi_mono_factor
from src.utils.config import EXIT_SUCCESS


def _compose(ctx: CommandContext) -> int:
    f, g = ctx.delta_map(ctx.args.first), ctx.delta_map(ctx.args.second)
    ctx.write(render_morphism(delta_compose(f, g), ctx.fmt))
    return EXIT_SUCCESS


def _factor(ctx: CommandContext) -> int:
    deltas, sigmas = epi_mono_factor(ctx.delta_map(ctx.args.morphism))
    if ctx.fmt == "json":
        ctx.write(dump_json({"delta_indices": deltas, "sigma_indices": sigmas}))
    else:
        ctx.write(f"delta indices: {deltas}\nsigma indices: {sigmas}")
    return EXIT_SUCCESS


def _dual(ctx: CommandContext) -> int:
    ctx.write(render_morphism(delta_dual(ctx.delta_map(ctx.args.morphism)), ctx.fmt))
    return EXIT_SUCCESS


def _audit(ctx: CommandContext) -> int:
    return emit_result(ctx.facade.delta_audit(ctx.nmax), ctx.fmt, ctx.out)


def register(subparsers: argparse._SubParsersAction) -> None:
    """Ajoute le groupe de verbes ``delta``."""
    group = subparsers.add_parser("delta", help="Morphismes de Δ").add_subparsers(dest="verb", required=True)

    compose = group.add_parser("compose", help="f puis g")
    compose.add_argument("first")
    compose.add_argument("second")
    add_common_options(compose)
    compose.set_defaults(handler=_compose)

    factor = group.add_parser("factor", help="Factorisation épi-mono")
    factor.add_argument("morphism")
    add_common_options(factor)
    factor.set_defaults(handler=_factor)

    dual = group.add_parser("dual", help="Application d'intervalles duale")
    dual.add_argument("morphism")
    add_common_options(dual)
    dual.set_defaults(handler=_dual)

    audit = group.add_parser("audit", help="Relations de Δ")
    add_common_options(audit, "nmax")
    audit.set_defaults(handler=_audit)
