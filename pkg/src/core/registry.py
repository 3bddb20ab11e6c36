"""Registre des modèles de groupes ordonnés, résolus par nom (``finite:3``, ``rational``, ``pl``)."""

from collections.abc import Callable
from typing import Any

from src.core.exceptions import RegistryError
from src.core.groups.ordered_group import OrderedGroup
from src.utils.logger import get_logger

logger = get_logger(__name__)

ModelFactory = Callable[[str | None], OrderedGroup]


class ModelRegistry:
    """Registre simple des modèles, avec résolution lazy.

    Une fabrique reçoit le texte après ``:`` dans le nom du modèle (ou None).
    Les fabriques singleton sont mises en cache par nom complet.

    Utilisation:
        registry = ModelRegistry()
        registry.register_singleton("rational", lambda _: RationalGroup())
        group = registry.resolve("rational")
    """

    def __init__(self) -> None:
        """Initialise le registre vide."""
        self._models: dict[str, dict[str, Any]] = {}
        self._singletons: dict[str, OrderedGroup] = {}

    def _add(self, name: str, factory: ModelFactory | None, is_singleton: bool) -> None:
        if factory is None:
            raise ValueError(f"Factory ne peut pas être None pour '{name}'")
        if name in self._models:
            raise RegistryError(f"Le modèle '{name}' est déjà enregistré. Utilisez .replace() pour le remplacer.")
        self._models[name] = {"factory": factory, "is_singleton": is_singleton}

    def register_singleton(self, name: str, factory: ModelFactory) -> None:
        """Enregistrer un modèle singleton.

        Args:
            name: Nom du modèle, sans argument
            factory: Fonction créant le groupe à partir de l'argument

        Raises:
            RegistryError: Si le modèle est déjà enregistré
            ValueError: Si factory est None

        """
        self._add(name, factory, is_singleton=True)
        logger.debug("Modèle singleton enregistré: %s", name)

    def register(self, name: str, factory: ModelFactory) -> None:
        """Enregistrer un modèle transient (nouvelle instance à chaque résolution).

        Raises:
            RegistryError: Si le modèle est déjà enregistré

        """
        self._add(name, factory, is_singleton=False)
        logger.debug("Modèle transient enregistré: %s", name)

    def resolve(self, spec: str) -> OrderedGroup:
        """Résoudre ``name`` ou ``name:argument``.

        Returns:
            Le groupe ordonné correspondant

        Raises:
            RegistryError: Si le modèle n'existe pas ou si la factory rejette l'argument

        """
        name, sep, argument = spec.partition(":")
        if name not in self._models:
            raise RegistryError(f"Le modèle '{name}' n'existe pas. Modèles disponibles: {list(self._models)}")

        info = self._models[name]
        if info["is_singleton"] and spec in self._singletons:
            logger.debug("Modèle résolu depuis le cache: %s", spec)
            return self._singletons[spec]

        try:
            group = info["factory"](argument if sep else None)
        except (ValueError, TypeError) as e:
            logger.error("Erreur lors de la résolution de '%s': %s", spec, e)
            raise RegistryError(f"Invalid argument for model '{name}': {argument!r}", details=str(e)) from e

        if info["is_singleton"]:
            self._singletons[spec] = group
            logger.debug("Modèle créé et mis en cache: %s", spec)
        else:
            logger.debug("Modèle transient créé: %s", spec)
        return group

    def has(self, name: str) -> bool:
        """Vérifier si un modèle est enregistré (nom sans argument)."""
        return name.partition(":")[0] in self._models

    def get_registered_models(self) -> list[str]:
        """Lister les noms enregistrés."""
        return list(self._models)

    def clear(self) -> None:
        """Effacer tous les modèles et singletons en cache."""
        self._models.clear()
        self._singletons.clear()
        logger.info("Registre vidé")

    def replace(self, name: str, factory: ModelFactory, is_singleton: bool = True) -> None:
        """Remplacer un modèle existant (et ses instances en cache)."""
        self._singletons = {k: v for k, v in self._singletons.items() if k.partition(":")[0] != name}
        self._models.pop(name, None)
        self._add(name, factory, is_singleton)
        logger.debug("Modèle remplacé: %s", name)

    def __repr__(self) -> str:
        """Représentation textuelle du registre."""
        return f"<ModelRegistry(models=[{', '.join(self._models)}])>"
