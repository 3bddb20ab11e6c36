"""Initialisation du registre des modèles de groupes ordonnés."""

from src.core.groups.ordered_group import IntegerGroup, RationalGroup
from src.core.groups.piecewise_linear import PLGroup
from src.core.registry import ModelRegistry
from src.utils.config import MODEL_NAMES
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _finite(argument: str | None) -> IntegerGroup:
    """``finite:n`` is ℤ with z = n + 1."""
    if argument is None or not argument.isdigit():
        raise ValueError("finite:<n> needs a non-negative integer n")
    return IntegerGroup(int(argument) + 1)


def _rational(argument: str | None) -> RationalGroup:
    if argument is not None:
        raise ValueError("rational takes no argument")
    return RationalGroup()


def _pl(argument: str | None) -> PLGroup:
    if argument is not None:
        raise ValueError("pl takes no argument")
    return PLGroup()


def setup_registry() -> ModelRegistry:
    """Configure et retourne le registre des modèles livrés.

    Returns:
        Registre contenant ``finite``, ``rational`` et ``pl``

    """
    registry = ModelRegistry()
    registry.register_singleton("finite", _finite)
    registry.register_singleton("rational", _rational)
    registry.register_singleton("pl", _pl)
    logger.info("Registre configuré avec %d modèles", len(registry.get_registered_models()))
    return registry


def initialize_application() -> ModelRegistry:
    """Initialise l'application complète.

    Returns:
        Registre configuré et validé

    Raises:
        RuntimeError: Si un modèle livré manque

    """
    try:
        logger.info("Démarrage de l'initialisation de l'application")
        registry = setup_registry()
        for name in MODEL_NAMES:
            if not registry.has(name):
                raise RuntimeError(f"Modèle manquant: {name}")
        logger.info("Application initialisée avec succès")
        return registry
    except Exception as e:
        logger.exception("Erreur lors de l'initialisation: %s", e)
        raise RuntimeError(f"Impossible d'initialiser l'application: {e}") from e


# Registre global de l'application
_APPLICATION_REGISTRY: ModelRegistry | None = None


def get_application_registry() -> ModelRegistry:
    """Obtenir le registre global, initialisé au premier appel."""
    global _APPLICATION_REGISTRY  # pylint: disable=global-statement

    if _APPLICATION_REGISTRY is None:
        _APPLICATION_REGISTRY = initialize_application()

    return _APPLICATION_REGISTRY


def reset_application_registry() -> None:
    """Réinitialiser le registre global (pour les tests)."""
    global _APPLICATION_REGISTRY  # pylint: disable=global-statement
    if _APPLICATION_REGISTRY is not None:
        _APPLICATION_REGISTRY.clear()
    _APPLICATION_REGISTRY = None
