"""Verbes ``cyclicset census|faces|audit|export``."""

import argparse
import os

from src.cli.context import CommandContext, add_common_options
from src.cli.formatters import dump_json, emit_result
from src.core.cyclic_sets.census import census, degeneracy_table, face_table, label_of
from src.core.cyclic_sets.constructions import named_cyclic_set
from src.core.cyclic_sets.finite_sets import Cell, FiniteSimplicialSet
from src.core.exceptions import CyclicValidationError
from src.core.io.codec import cell_label, cyclic_set_from_json, cyclic_set_to_json
from src.core.io.loader import is_payload_reference
from src.core.validator import InputValidator
from src.utils.config import DEFAULT_TRUNCATION, EXIT_SUCCESS, NAMED_CYCLIC_SETS
from src.utils.logger import get_logger

logger = get_logger(__name__)


def resolve_set(ctx: CommandContext) -> FiniteSimplicialSet:
    """Ensemble nommé tronqué à ``--truncation``, ou charge utile JSON.

    Raises:
        CyclicValidationError: Si le nom n'est ni connu ni une charge utile

    """
    name = ctx.args.set
    truncation = InputValidator.validate_truncation(ctx.args.truncation)
    try:
        return named_cyclic_set(name, truncation)
    except KeyError:
        pass
    if is_payload_reference(name) or os.path.exists(name):
        return cyclic_set_from_json(ctx.payload(name))
    raise CyclicValidationError(
        f"Unknown cyclic set {name!r}; expected {', '.join(NAMED_CYCLIC_SETS)}, yoneda:<k>, simplex:<k> or a JSON file"
    )


def _label(cell: Cell) -> str:
    return label_of(cell) or cell_label(cell)


def _census(ctx: CommandContext) -> int:
    counts = census(resolve_set(ctx))
    if ctx.fmt == "json":
        ctx.write(dump_json({"nondegenerate": list(counts)}))
    else:
        ctx.write("\n".join(f"dimension {n}: {count}" for n, count in enumerate(counts)))
    return EXIT_SUCCESS


def _faces(ctx: CommandContext) -> int:
    s = resolve_set(ctx)
    n = InputValidator.validate_int(ctx.args.level, "--level", 1, s.truncation)
    faces = face_table(s, n)
    degeneracies = degeneracy_table(s, n - 1) if ctx.args.degeneracies else {}
    if ctx.fmt == "json":
        payload = {
            "faces": [{"cell": _label(x), "j": j, "face": _label(y)} for (x, j), y in faces.items()],
            "degeneracies": [{"cell": _label(x), "j": j, "image": _label(y)} for (x, j), y in degeneracies.items()],
        }
        ctx.write(dump_json(payload))
        return EXIT_SUCCESS
    lines = [f"{_label(x)} δ_{j} = {_label(y)}" for (x, j), y in faces.items()]
    lines += [f"{_label(x)} σ_{j} = {_label(y)}" for (x, j), y in degeneracies.items()]
    ctx.write("\n".join(lines) if lines else "no nondegenerate cells")
    return EXIT_SUCCESS


def _audit(ctx: CommandContext) -> int:
    return emit_result(ctx.facade.cyclic_set_audit(resolve_set(ctx)), ctx.fmt, ctx.out)


def _export(ctx: CommandContext) -> int:
    ctx.write(dump_json(cyclic_set_to_json(resolve_set(ctx))))
    return EXIT_SUCCESS


def register(subparsers: argparse._SubParsersAction) -> None:
    """Ajoute le groupe de verbes ``cyclicset``."""
    group = subparsers.add_parser("cyclicset", help="Ensembles cycliques finis").add_subparsers(
        dest="verb", required=True
    )
    handlers = {
        "census": (_census, "Cellules non dégénérées par dimension"),
        "faces": (_faces, "Faces des cellules non dégénérées"),
        "audit": (_audit, "Relations simpliciales et cycliques"),
        "export": (_export, "Forme JSON de l'ensemble"),
    }
    for verb, (handler, help_text) in handlers.items():
        parser = group.add_parser(verb, help=help_text)
        parser.add_argument("set", help="Nom ou fichier JSON")
        parser.add_argument("--truncation", default=str(DEFAULT_TRUNCATION), help="Rang de troncature N")
        if verb == "faces":
            parser.add_argument("--level", default="2", help="Niveau des cellules")
            parser.add_argument("--degeneracies", action="store_true", help="Dégénérescences du niveau n−1")
        add_common_options(parser)
        parser.set_defaults(handler=handler)
