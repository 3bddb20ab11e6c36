"""Contexte partagé par les commandes: arguments, flux de sortie, chargeur et facade."""

import argparse
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, TextIO

from src.core.categories.cyclic import LambdaMap
from src.core.categories.delta import DeltaMap, IntervalMap
from src.core.categories.expressions import parse_expression
from src.core.exceptions import CyclicValidationError
from src.core.facade import CyclicFacade
from src.core.io.codec import morphism_from_json
from src.core.io.loader import PayloadLoader, is_payload_reference
from src.core.validator import InputValidator
from src.utils.config import (
    DEFAULT_MODEL,
    DEFAULT_NMAX,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    OUTPUT_FORMATS,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


def add_common_options(parser: argparse.ArgumentParser, *names: str) -> None:
    """Ajoute ``--format`` et les options d'échantillonnage demandées à un sous-parseur."""
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=DEFAULT_OUTPUT_FORMAT, help="Format de sortie")
    options = {
        "nmax": ("--nmax", str(DEFAULT_NMAX), "Rang maximal des instances"),
        "seed": ("--seed", str(DEFAULT_SEED), "Graine de l'échantillonneur"),
        "samples": ("--samples", str(DEFAULT_SAMPLES), "Nombre d'échantillons"),
        "model": ("--model", DEFAULT_MODEL, "Modèle: finite:<n>, rational ou pl"),
    }
    for name in names:
        flag, default, help_text = options[name]
        parser.add_argument(flag, default=default, help=help_text)


@dataclass
class CommandContext:
    """Tout ce dont un gestionnaire de commande a besoin."""

    args: argparse.Namespace
    out: TextIO
    loader: PayloadLoader
    facade_factory: Callable[[], CyclicFacade] = field(default=CyclicFacade)

    @cached_property
    def facade(self) -> CyclicFacade:
        """Facade, créée au premier usage."""
        return self.facade_factory()

    @property
    def fmt(self) -> str:
        """Format de sortie (``text`` ou ``json``)."""
        return getattr(self.args, "format", "text")

    @property
    def nmax(self) -> int:
        """``--nmax`` validé."""
        return InputValidator.validate_nmax(self.args.nmax)

    @property
    def seed(self) -> int:
        """``--seed`` validé."""
        return InputValidator.validate_seed(self.args.seed)

    @property
    def samples(self) -> int:
        """``--samples`` validé."""
        return InputValidator.validate_samples(self.args.samples)

    @property
    def model(self) -> str:
        """``--model`` validé."""
        return InputValidator.validate_model(self.args.model)

    def write(self, text: str) -> None:
        """Écrit un bloc de sortie suivi d'un retour à la ligne."""
        self.out.write(text if text.endswith("\n") else text + "\n")

    def morphism(self, text: str) -> DeltaMap | LambdaMap | IntervalMap:
        """Lit un morphisme donné en expression, en JSON en ligne, en fichier JSON ou par ``-``."""
        if is_payload_reference(text):
            return morphism_from_json(self.loader.load(text))
        return parse_expression(text)

    def delta_map(self, text: str) -> DeltaMap:
        """Morphisme de Δ.

        Raises:
            CyclicValidationError: Si le morphisme contient une rotation

        """
        f = self.morphism(text)
        if not isinstance(f, DeltaMap):
            raise CyclicValidationError(f"{text!r} is not a morphism of Δ")
        return f

    def payload(self, source: str) -> Any:
        """Charge utile JSON depuis un chemin, du texte en ligne ou ``-``."""
        return self.loader.load(source)
