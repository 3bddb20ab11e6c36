"""Verbes ``pl compose|compare|eval|witness`` sur les homéomorphismes PL périodiques."""

import argparse

from src.cli.context import CommandContext, add_common_options
from src.cli.formatters import dump_json
from src.core.groups.piecewise_linear import (
    PLElement,
    PLGroup,
    first_moved_point,
    noncommuting_pair,
    pl_compare,
    pl_compose,
    pl_eval,
    pl_inverse,
)
from src.core.io.codec import fraction_to_json, pl_from_json, pl_to_json
from src.core.validator import InputValidator
from src.utils.config import EXIT_SUCCESS

_ORDER_SYMBOLS = {-1: "<", 0: "=", 1: ">"}


def _element(ctx: CommandContext, source: str) -> PLElement:
    return pl_from_json(ctx.payload(source))


def _show(ctx: CommandContext, phi: PLElement) -> str:
    return dump_json(pl_to_json(phi)) if ctx.fmt == "json" else repr(phi)


def _compose(ctx: CommandContext) -> int:
    ctx.write(_show(ctx, pl_compose(_element(ctx, ctx.args.first), _element(ctx, ctx.args.second))))
    return EXIT_SUCCESS


def _compare(ctx: CommandContext) -> int:
    phi, psi = _element(ctx, ctx.args.first), _element(ctx, ctx.args.second)
    order = pl_compare(phi, psi)
    moved = first_moved_point(pl_compose(psi, pl_inverse(phi)))
    if ctx.fmt == "json":
        point = None if moved is None else fraction_to_json(moved)
        ctx.write(dump_json({"order": order, "first_moved_point": point}))
    else:
        ctx.write(f"{phi!r} {_ORDER_SYMBOLS[order]} {psi!r}\nfirst moved point: {moved}")
    return EXIT_SUCCESS


def _eval(ctx: CommandContext) -> int:
    value = pl_eval(_element(ctx, ctx.args.element), InputValidator.validate_rational(ctx.args.x))
    ctx.write(dump_json({"value": fraction_to_json(value)}) if ctx.fmt == "json" else str(value))
    return EXIT_SUCCESS


def _witness(ctx: CommandContext) -> int:
    group = PLGroup()
    phi, psi = noncommuting_pair()
    left, right = group.mul(phi, psi), group.mul(psi, phi)
    if ctx.fmt == "json":
        payload = {
            "phi": pl_to_json(phi),
            "psi": pl_to_json(psi),
            "phi_psi": pl_to_json(left),
            "psi_phi": pl_to_json(right),
        }
        ctx.write(dump_json(payload))
    else:
        ctx.write(f"φ = {phi!r}\nψ = {psi!r}\nφψ = {left!r}\nψφ = {right!r}")
    return EXIT_SUCCESS


def register(subparsers: argparse._SubParsersAction) -> None:
    """Ajoute le groupe de verbes ``pl``."""
    group = subparsers.add_parser("pl", help="Modèle PL").add_subparsers(dest="verb", required=True)

    compose = group.add_parser("compose", help="φ puis ψ")
    compose.add_argument("first")
    compose.add_argument("second")
    add_common_options(compose)
    compose.set_defaults(handler=_compose)

    compare = group.add_parser("compare", help="Ordre à gauche")
    compare.add_argument("first")
    compare.add_argument("second")
    add_common_options(compare)
    compare.set_defaults(handler=_compare)

    evaluate = group.add_parser("eval", help="φ(x)")
    evaluate.add_argument("element")
    evaluate.add_argument("x")
    add_common_options(evaluate)
    evaluate.set_defaults(handler=_eval)

    witness = group.add_parser("witness", help="Paire non commutative")
    add_common_options(witness)
    witness.set_defaults(handler=_witness)
