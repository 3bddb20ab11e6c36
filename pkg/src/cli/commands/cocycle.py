"""Verbes ``cocycle eval|tables|check``."""

import argparse

from src.cli.commands.realize import parse_circle_point, structure
from src.cli.context import CommandContext, add_common_options
from src.cli.formatters import dump_json, emit_result
from src.core.realization.circle import circle_inverse, cocycle, rho
from src.core.realization.cocycle_tables import cocycle_tables, cocycle_tables_json, format_cocycle_tables
from src.utils.config import EXIT_SUCCESS


def _eval(ctx: CommandContext) -> int:
    cs = structure(ctx)
    x, y = parse_circle_point(ctx, cs, ctx.args.x), parse_circle_point(ctx, cs, ctx.args.y)
    c = cocycle(x, y, cs)
    r = rho(circle_inverse(x, cs), y)
    if ctx.fmt == "json":
        ctx.write(dump_json({"cocycle": c, "rho": r}))
    else:
        ctx.write(f"c({x}, {y}) = {c}\nρ({x}⁻¹, {y}) = {r}")
    return EXIT_SUCCESS


def _tables(ctx: CommandContext) -> int:
    tables = cocycle_tables()
    if ctx.fmt == "json":
        ctx.write(dump_json(cocycle_tables_json(tables)))
    else:
        ctx.out.write(format_cocycle_tables(tables))
    return EXIT_SUCCESS


def _check(ctx: CommandContext) -> int:
    return emit_result(ctx.facade.cocycle_check(ctx.model, ctx.samples, ctx.seed), ctx.fmt, ctx.out)


def register(subparsers: argparse._SubParsersAction) -> None:
    """Ajoute le groupe de verbes ``cocycle``."""
    group = subparsers.add_parser("cocycle", help="2-cocycle du cercle").add_subparsers(dest="verb", required=True)

    evaluate = group.add_parser("eval", help="c(x, y)")
    evaluate.add_argument("x")
    evaluate.add_argument("y")
    add_common_options(evaluate, "model")
    evaluate.set_defaults(handler=_eval)

    tables = group.add_parser("tables", help="Tables ω et ρ des dimensions 1 à 3")
    add_common_options(tables)
    tables.set_defaults(handler=_tables)

    check = group.add_parser("check", help="Identité du cocycle, loi du cercle et action")
    add_common_options(check, "model", "samples", "seed")
    check.set_defaults(handler=_check)
