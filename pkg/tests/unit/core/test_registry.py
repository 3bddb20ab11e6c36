"""Tests pour le registre des modèles de groupes ordonnés."""

from unittest.mock import MagicMock

import pytest

from src.core.exceptions import RegistryError
from src.core.groups.ordered_group import IntegerGroup, RationalGroup
from src.core.registry import ModelRegistry


@pytest.fixture
def registry():
    """Registre vide pour chaque test."""
    return ModelRegistry()


@pytest.mark.unit
class TestModelRegistry:
    """Tests des fonctionnalités du registre."""

    def test_register_singleton(self, registry):
        """Tester l'enregistrement d'un modèle singleton."""
        registry.register_singleton("rational", lambda _: RationalGroup())
        assert registry.has("rational")
        assert registry.get_registered_models() == ["rational"]

    def test_singleton_is_cached_per_spec(self, registry):
        """Tester que chaque spec complète a sa propre instance en cache."""
        factory = MagicMock(side_effect=lambda arg: IntegerGroup(int(arg) + 1))
        registry.register_singleton("finite", factory)

        first = registry.resolve("finite:2")
        assert registry.resolve("finite:2") is first
        assert registry.resolve("finite:3") == IntegerGroup(4)
        assert factory.call_count == 2

    def test_transient_creates_new_instances(self, registry):
        """Tester qu'un modèle transient appelle la factory à chaque résolution."""
        factory = MagicMock(side_effect=[RationalGroup(), RationalGroup()])
        registry.register("rational", factory)

        registry.resolve("rational")
        registry.resolve("rational")
        assert factory.call_count == 2

    def test_factory_receives_argument(self, registry):
        """Tester que le texte après ``:`` est passé à la factory."""
        factory = MagicMock(return_value=RationalGroup())
        registry.register("rational", factory)

        registry.resolve("rational")
        registry.resolve("rational:2")
        assert [c.args for c in factory.call_args_list] == [(None,), ("2",)]

    def test_unknown_model(self, registry):
        """Tester qu'un modèle inconnu lève RegistryError."""
        with pytest.raises(RegistryError, match="n'existe pas"):
            registry.resolve("real")

    def test_duplicate_registration(self, registry):
        """Tester qu'on ne peut pas enregistrer deux fois le même nom."""
        registry.register_singleton("rational", lambda _: RationalGroup())
        with pytest.raises(RegistryError, match="déjà enregistré"):
            registry.register("rational", lambda _: RationalGroup())

    def test_none_factory(self, registry):
        """Tester qu'une factory None est refusée."""
        with pytest.raises(ValueError, match="None"):
            registry.register_singleton("rational", None)

    def test_factory_rejecting_argument(self, registry):
        """Tester que ValueError de la factory devient RegistryError."""

        def factory(argument):
            raise ValueError(f"bad {argument}")

        registry.register("finite", factory)
        with pytest.raises(RegistryError) as exc_info:
            registry.resolve("finite:x")
        assert exc_info.value.details == "bad x"

    def test_replace_drops_cached_instances(self, registry):
        """Tester que replace() oublie les singletons du modèle remplacé."""
        registry.register_singleton("rational", lambda _: RationalGroup())
        registry.resolve("rational")
        registry.replace("rational", lambda _: RationalGroup(2))
        assert registry.resolve("rational") == RationalGroup(2)

    def test_clear(self, registry):
        """Tester que clear() vide le registre."""
        registry.register_singleton("rational", lambda _: RationalGroup())
        registry.clear()
        assert not registry.has("rational")

    def test_repr(self, registry):
        """Tester la représentation textuelle."""
        registry.register_singleton("rational", lambda _: RationalGroup())
        registry.register_singleton("pl", lambda _: RationalGroup())
        assert repr(registry) == "<ModelRegistry(models=[rational, pl])>"
