"""Verbes ``circle mul|inverse`` sur le groupe |C|_p."""

import argparse

from src.cli.commands.realize import parse_circle_point, structure
from src.cli.context import CommandContext, add_common_options
from src.cli.formatters import dump_json
from src.core.io.codec import value_to_json
from src.core.realization.circle import CirclePoint, circle_inverse, circle_mul
from src.utils.config import EXIT_SUCCESS


def _write_point(ctx: CommandContext, key: str, x: CirclePoint) -> None:
    if ctx.fmt == "json":
        ctx.write(dump_json({key: value_to_json(x.interval, x.value)}))
    else:
        ctx.write(str(x))


def _mul(ctx: CommandContext) -> int:
    cs = structure(ctx)
    x, y = parse_circle_point(ctx, cs, ctx.args.x), parse_circle_point(ctx, cs, ctx.args.y)
    _write_point(ctx, "product", circle_mul(x, y, cs))
    return EXIT_SUCCESS


def _inverse(ctx: CommandContext) -> int:
    cs = structure(ctx)
    _write_point(ctx, "inverse", circle_inverse(parse_circle_point(ctx, cs, ctx.args.x), cs))
    return EXIT_SUCCESS


def register(subparsers: argparse._SubParsersAction) -> None:
    """Ajoute le groupe de verbes ``circle``."""
    group = subparsers.add_parser("circle", help="Groupe |C|_p").add_subparsers(dest="verb", required=True)

    mul = group.add_parser("mul", help="Loi de groupe du cercle")
    mul.add_argument("x", help="p/q, ou un élément PL en JSON pour --model pl")
    mul.add_argument("y")
    add_common_options(mul, "model")
    mul.set_defaults(handler=_mul)

    inverse = group.add_parser("inverse", help="Inverse x⁻¹ = τ_1(x)")
    inverse.add_argument("x")
    add_common_options(inverse, "model")
    inverse.set_defaults(handler=_inverse)
