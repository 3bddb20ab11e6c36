"""Construction du parseur et répartition des commandes."""

import argparse
import sys
from collections.abc import Callable, Sequence
from typing import TextIO

from src.cli.commands import COMMAND_MODULES
from src.cli.context import CommandContext
from src.core.exceptions import CyclicError
from src.core.facade import CyclicFacade
from src.core.io.loader import PayloadLoader
from src.utils.config import EXIT_USAGE_ERROR
from src.utils.logger import get_logger

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Parseur avec un sous-parseur par groupe de verbes."""
    parser = argparse.ArgumentParser(
        prog="cyclic-structures",
        description="Catégories Δ et Λ, ensembles cycliques, cocycle du cercle et cercles abstraits",
    )
    subparsers = parser.add_subparsers(dest="group", required=True)
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def run(
    argv: Sequence[str] | None = None,
    stdout: TextIO | None = None,
    stdin: TextIO | None = None,
    stderr: TextIO | None = None,
    facade_factory: Callable[[], CyclicFacade] = CyclicFacade,
) -> int:
    """Analyse ``argv``, exécute la commande et renvoie son code de sortie.

    Args:
        argv: Arguments sans le nom du programme (sys.argv[1:] par défaut)
        stdout: Flux de sortie de la commande
        stdin: Flux lu pour les charges utiles ``-``
        stderr: Flux recevant les diagnostics d'une ligne
        facade_factory: Construit la facade au premier usage

    Returns:
        0 en cas de succès, 1 si un audit trouve des échecs, 2 pour une erreur d'usage

    """
    out, err = stdout or sys.stdout, stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR

    logger.info("[CLI] %s %s", args.group, getattr(args, "verb", ""))
    ctx = CommandContext(args=args, out=out, loader=PayloadLoader(stdin), facade_factory=facade_factory)
    try:
        return args.handler(ctx)
    except CyclicError as e:
        logger.error("[CLI] %s", e.message)
        err.write(f"error: {e.message}\n")
        return EXIT_USAGE_ERROR
