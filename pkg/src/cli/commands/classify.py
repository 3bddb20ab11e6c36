"""Verbe ``classify``: structure d'un modèle, groupe d'extension et isomorphisme."""

import argparse

from src.cli.context import CommandContext, add_common_options
from src.cli.formatters import emit_result


def _classify(ctx: CommandContext) -> int:
    return emit_result(ctx.facade.classify_model(ctx.model, ctx.samples, ctx.seed), ctx.fmt, ctx.out)


def _structure(ctx: CommandContext) -> int:
    result = ctx.facade.structure_audit(ctx.model, ctx.nmax, ctx.samples, ctx.seed)
    return emit_result(result, ctx.fmt, ctx.out)


def register(subparsers: argparse._SubParsersAction) -> None:
    """Ajoute ``classify`` et ``structure``."""
    classify = subparsers.add_parser("classify", help="Classification par le groupe d'extension")
    add_common_options(classify, "model", "samples", "seed")
    classify.set_defaults(handler=_classify)

    structure = subparsers.add_parser("structure", help="Relations de la structure cyclique d'un modèle")
    add_common_options(structure, "model", "nmax", "samples", "seed")
    structure.set_defaults(handler=_structure)
