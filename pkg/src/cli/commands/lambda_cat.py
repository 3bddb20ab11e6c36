"""Verbes ``lambda compose|decompose|crossed|transpose|audit|enumerate``."""

import argparse

from src.cli.context import CommandContext, add_common_options
from src.cli.formatters import dump_json, emit_result, format_morphism, render_morphism
from src.core.categories.cyclic import (
    LambdaMap,
    crossed_decompose,
    delta_lambda_decompose,
    embed_j,
    enumerate_lambda_hom,
    lambda_compose,
    lambda_transpose,
)
from src.core.categories.delta import DeltaMap
from src.core.exceptions import CyclicValidationError
from src.core.io.codec import morphism_to_json
from src.core.validator import InputValidator
from src.utils.config import EXIT_SUCCESS


def _lambda_map(ctx: CommandContext, text: str) -> LambdaMap:
    f = ctx.morphism(text)
    if isinstance(f, DeltaMap):
        return embed_j(f)
    if not isinstance(f, LambdaMap):
        raise CyclicValidationError(f"{text!r} is not a morphism of Λ")
    return f


def _compose(ctx: CommandContext) -> int:
    f, g = _lambda_map(ctx, ctx.args.first), _lambda_map(ctx, ctx.args.second)
    ctx.write(render_morphism(lambda_compose(f, g), ctx.fmt))
    return EXIT_SUCCESS


def _decompose(ctx: CommandContext) -> int:
    h, a = delta_lambda_decompose(_lambda_map(ctx, ctx.args.morphism))
    if ctx.fmt == "json":
        ctx.write(dump_json({"h": morphism_to_json(h), "a": a}))
    else:
        ctx.write(f"h: {format_morphism(h)}\na: {a}")
    return EXIT_SUCCESS


def _crossed(ctx: CommandContext) -> int:
    gamma = _lambda_map(ctx, ctx.args.gamma)
    phi = ctx.delta_map(ctx.args.phi)
    moved, rotation = crossed_decompose(gamma, phi)
    if ctx.fmt == "json":
        ctx.write(dump_json({"phi": morphism_to_json(moved), "gamma": morphism_to_json(rotation)}))
    else:
        ctx.write(f"γ_*(φ): {format_morphism(moved)}\nφ^*(γ): {format_morphism(rotation)}")
    return EXIT_SUCCESS


def _transpose(ctx: CommandContext) -> int:
    ctx.write(render_morphism(lambda_transpose(_lambda_map(ctx, ctx.args.morphism)), ctx.fmt))
    return EXIT_SUCCESS


def _audit(ctx: CommandContext) -> int:
    return emit_result(ctx.facade.lambda_audit(ctx.nmax), ctx.fmt, ctx.out)


def _enumerate(ctx: CommandContext) -> int:
    n = InputValidator.validate_int(ctx.args.source, "source", 0, ctx.nmax)
    m = InputValidator.validate_int(ctx.args.target, "target", 0, ctx.nmax)
    maps = enumerate_lambda_hom(n, m)
    if ctx.fmt == "json":
        ctx.write(dump_json([morphism_to_json(f) for f in maps]))
    else:
        ctx.write("\n".join([f"|Hom([{n}], [{m}])| = {len(maps)}", *(format_morphism(f) for f in maps)]))
    return EXIT_SUCCESS


def register(subparsers: argparse._SubParsersAction) -> None:
    """Ajoute le groupe de verbes ``lambda``."""
    group = subparsers.add_parser("lambda", help="Morphismes de Λ").add_subparsers(dest="verb", required=True)

    compose = group.add_parser("compose", help="f puis g")
    compose.add_argument("first")
    compose.add_argument("second")
    add_common_options(compose)
    compose.set_defaults(handler=_compose)

    decompose = group.add_parser("decompose", help="f = j(h)∘τ^a")
    decompose.add_argument("morphism")
    add_common_options(decompose)
    decompose.set_defaults(handler=_decompose)

    crossed = group.add_parser("crossed", help="γ∘φ = γ_*(φ)∘φ^*(γ)")
    crossed.add_argument("gamma")
    crossed.add_argument("phi")
    add_common_options(crossed)
    crossed.set_defaults(handler=_crossed)

    transpose = group.add_parser("transpose", help="Transposée f^t")
    transpose.add_argument("morphism")
    add_common_options(transpose)
    transpose.set_defaults(handler=_transpose)

    audit = group.add_parser("audit", help="Présentation de Λ")
    add_common_options(audit, "nmax")
    audit.set_defaults(handler=_audit)

    enumerate_parser = group.add_parser("enumerate", help="Hom_Λ([n], [m])")
    enumerate_parser.add_argument("source")
    enumerate_parser.add_argument("target")
    add_common_options(enumerate_parser, "nmax")
    enumerate_parser.set_defaults(handler=_enumerate)
