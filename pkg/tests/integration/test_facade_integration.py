"""Integration tests for CyclicFacade with the registry, the loader and the codec."""

import json

import pytest

from src.core.circles.abstract_circle import is_circle_isomorphism, quotient_circle, reconstruction_map
from src.core.circles.archimedean import integer_arch
from src.core.cyclic_sets.census import census
from src.core.cyclic_sets.constructions import circle_square
from src.core.facade import CyclicFacade
from src.core.groups.ordered_group import RationalGroup
from src.core.groups.piecewise_linear import pl_compare, pl_translation
from src.core.io.codec import circle_from_json, circle_to_json, cyclic_set_from_json, cyclic_set_to_json, pl_from_json
from src.core.io.loader import PayloadLoader
from src.core.setup import get_application_registry, setup_registry

# Reduced sample count for the PL model, see tests/README.md.
PL_COCYCLE_SAMPLES = 40


@pytest.mark.integration
class TestCyclicFacadeIntegration:
    """Integration tests for CyclicFacade."""

    @pytest.fixture
    def payload_file(self, tmp_path):
        """Write a payload to a temporary JSON file.

        Returns:
            Callable returning the path of the written file

        """

        def write(name, payload):
            path = tmp_path / name
            path.write_text(json.dumps(payload), encoding="utf-8")
            return str(path)

        return write

    def test_exported_cyclic_set_audits_from_file(self, facade, payload_file):
        """Test C×C written to disk, read back and audited."""
        square = circle_square(3)
        path = payload_file("square.json", cyclic_set_to_json(square))

        loaded = cyclic_set_from_json(PayloadLoader().load(path))
        assert census(loaded) == (1, 3, 2, 0)

        result = facade.cyclic_set_audit(loaded)
        assert result.success
        assert result.report.checked > 0

    def test_circle_payload_reconstructs(self, facade, payload_file):
        """Test that a circle read from disk is reconstructed from each point."""
        path = payload_file("circle.json", circle_to_json(quotient_circle(integer_arch(3))))
        c = circle_from_json(PayloadLoader().load(path))

        assert facade.circle_audit(c).success
        for x in c.points:
            x_set, pmap, smap = reconstruction_map(c, x)
            assert x_set.period == 3
            assert is_circle_isomorphism(quotient_circle(x_set), c, pmap, smap)

    def test_pl_payload_from_stdin(self, stdin_factory):
        """Test a PL element read from stdin."""
        loader = PayloadLoader(stdin_factory('{"breakpoints": [["0", "1/3"]]}'))
        phi = pl_from_json(loader.load("-"))
        assert pl_compare(phi, pl_translation(0)) == 1

    def test_replaced_model_is_used(self):
        """Test that a model replaced in the registry reaches the facade."""
        registry = setup_registry()
        registry.replace("rational", lambda _: RationalGroup(2))
        facade = CyclicFacade(registry)
        assert facade.structure_of("rational").group == RationalGroup(2)

    def test_application_registry_backs_default_facade(self):
        """Test that the default facade shares the global registry."""
        registry = get_application_registry()
        assert CyclicFacade().resolve_model("finite:1") is registry.resolve("finite:1")

    @pytest.mark.slow
    @pytest.mark.parametrize("spec", ["finite:0", "finite:3", "rational"])
    def test_full_model_checks(self, facade, spec):
        """Test classification and the cocycle checks for the integer and rational models."""
        assert facade.classify_model(spec, samples=40, seed=11).success
        assert facade.cocycle_check(spec, samples=40, seed=11).success

    @pytest.mark.slow
    def test_pl_classification_at_default_size(self, facade):
        """Test the classification round trip of the PL model on 200 samples with seed 0."""
        result = facade.classify_model("pl", samples=200, seed=0)
        assert result.success, result.report
        assert result.report.checked > 0

    @pytest.mark.slow
    def test_pl_cocycle_check(self, facade):
        """Test the cocycle identity, the circle law and the action laws on the PL model."""
        result = facade.cocycle_check("pl", samples=PL_COCYCLE_SAMPLES, seed=0)
        assert result.success, result.report
