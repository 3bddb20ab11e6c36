"""Validation des arguments de la ligne de commande."""

import re
from fractions import Fraction

from src.core.exceptions import CyclicValidationError
from src.utils.config import MAX_NMAX, MAX_SAMPLES, MAX_TRUNCATION, MODEL_NAMES
from src.utils.logger import get_logger

logger = get_logger(__name__)


class InputValidator:
    """Classe pour valider les valeurs reçues de la CLI."""

    # Patterns de validation
    INTEGER_PATTERN = re.compile(r"^-?\d+$")
    RATIONAL_PATTERN = re.compile(r"^-?\d+(/\d+)?$")
    MODEL_PATTERN = re.compile(r"^(finite:\d+|rational|pl)$")
    FIBER_PATTERN = re.compile(r"^finite:(\d+)$")

    @staticmethod
    def validate_int(value: str, name: str, minimum: int | None = None, maximum: int | None = None) -> int:
        """Validate an integer option.

        Args:
            value: Texte reçu
            name: Nom de l'option, repris dans le message
            minimum: Borne inférieure incluse
            maximum: Borne supérieure incluse

        Returns:
            int: Valeur validée.

        Raises:
            CyclicValidationError: Si invalide.

        """
        text = str(value).strip()
        if not InputValidator.INTEGER_PATTERN.match(text):
            raise CyclicValidationError(f"{name} must be an integer, got {value!r}")
        number = int(text)
        if minimum is not None and number < minimum:
            raise CyclicValidationError(f"{name} must be at least {minimum}, got {number}")
        if maximum is not None and number > maximum:
            raise CyclicValidationError(f"{name} must be at most {maximum}, got {number}")
        return number

    @staticmethod
    def validate_nmax(value: str) -> int:
        """``--nmax`` in [1, MAX_NMAX]."""
        return InputValidator.validate_int(value, "--nmax", 1, MAX_NMAX)

    @staticmethod
    def validate_samples(value: str) -> int:
        """``--samples`` in [1, MAX_SAMPLES]."""
        return InputValidator.validate_int(value, "--samples", 1, MAX_SAMPLES)

    @staticmethod
    def validate_seed(value: str) -> int:
        """``--seed``: any integer."""
        return InputValidator.validate_int(value, "--seed")

    @staticmethod
    def validate_truncation(value: str) -> int:
        """``--truncation`` in [1, MAX_TRUNCATION]."""
        return InputValidator.validate_int(value, "--truncation", 1, MAX_TRUNCATION)

    @staticmethod
    def validate_model(spec: str) -> str:
        """Model spec ``finite:<n>``, ``rational`` or ``pl``.

        Raises:
            CyclicValidationError: Si le modèle n'est pas reconnu.

        """
        if not InputValidator.MODEL_PATTERN.match(spec):
            raise CyclicValidationError(f"Unknown model {spec!r}; expected finite:<n>, {', '.join(MODEL_NAMES[1:])}")
        return spec

    @staticmethod
    def validate_fiber(spec: str) -> int:
        """Fiber ``finite:<n>``, returning n.

        Raises:
            CyclicValidationError: Si la fibre n'est pas finie.

        """
        match = InputValidator.FIBER_PATTERN.match(spec)
        if match is None:
            raise CyclicValidationError(f"Unknown fiber {spec!r}; expected finite:<n>")
        return int(match.group(1))

    @staticmethod
    def validate_rational(value: str) -> Fraction:
        """Exact rational written ``p/q`` or ``n``.

        Raises:
            CyclicValidationError: Si la valeur n'est pas un rationnel exact.

        """
        text = value.strip()
        if not InputValidator.RATIONAL_PATTERN.match(text) or re.search(r"/0+$", text):
            raise CyclicValidationError(f"Expected an exact rational p/q, got {value!r}")
        return Fraction(text)

    @staticmethod
    def validate_values(text: str) -> list[Fraction]:
        """Comma-separated rationals, as given to ``--values``."""
        tokens = [t for t in text.split(",") if t.strip()]
        if not tokens:
            raise CyclicValidationError("--values needs at least one value")
        values = [InputValidator.validate_rational(t) for t in tokens]
        logger.debug("[VALIDATOR] %d valeurs validées", len(values))
        return values
