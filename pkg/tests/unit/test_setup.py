"""Tests pour le module d'initialisation du registre des modèles."""

from unittest.mock import patch

import pytest

from src.core.exceptions import RegistryError
from src.core.groups.ordered_group import IntegerGroup, RationalGroup
from src.core.groups.piecewise_linear import PLGroup
from src.core.registry import ModelRegistry
from src.core.setup import (
    get_application_registry,
    initialize_application,
    reset_application_registry,
    setup_registry,
)


@pytest.mark.unit
class TestSetupRegistry:
    """Tests pour setup_registry()."""

    def test_registers_shipped_models(self):
        """setup_registry enregistre finite, rational et pl."""
        registry = setup_registry()
        assert isinstance(registry, ModelRegistry)
        assert registry.get_registered_models() == ["finite", "rational", "pl"]

    @pytest.mark.parametrize(
        ("spec", "expected"),
        [
            ("finite:0", IntegerGroup(1)),
            ("finite:3", IntegerGroup(4)),
            ("rational", RationalGroup()),
            ("pl", PLGroup()),
        ],
    )
    def test_resolves_models(self, spec, expected):
        """Chaque spec livrée se résout vers son groupe."""
        assert setup_registry().resolve(spec) == expected

    @pytest.mark.parametrize("spec", ["finite", "finite:-1", "finite:a", "rational:2", "pl:1"])
    def test_rejects_bad_arguments(self, spec):
        """Les arguments invalides lèvent RegistryError."""
        with pytest.raises(RegistryError):
            setup_registry().resolve(spec)


@pytest.mark.unit
class TestApplicationRegistry:
    """Tests pour le registre global."""

    def test_initialize_application(self):
        """initialize_application retourne un registre complet."""
        assert initialize_application().has("pl")

    def test_initialize_application_wraps_errors(self):
        """Une erreur de configuration devient RuntimeError."""
        with patch("src.core.setup.setup_registry", side_effect=RegistryError("boom")):
            with pytest.raises(RuntimeError, match="Impossible d'initialiser"):
                initialize_application()

    def test_global_registry_is_shared(self):
        """get_application_registry retourne toujours la même instance."""
        assert get_application_registry() is get_application_registry()

    def test_reset_application_registry(self):
        """reset_application_registry force une nouvelle initialisation."""
        first = get_application_registry()
        reset_application_registry()
        assert get_application_registry() is not first
