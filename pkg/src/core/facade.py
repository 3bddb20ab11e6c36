"""Facade regroupant les audits et la classification derrière des DTOs."""

from collections.abc import Callable

from src.core.categories.cyclic import lambda_presentation_audit
from src.core.categories.delta import delta_relation_audit
from src.core.circles.abstract_circle import AbstractCircle, circle_axiom_audit
from src.core.cyclic_sets.constructions import circle_set
from src.core.cyclic_sets.finite_sets import (
    FiniteCyclicSet,
    FiniteSimplicialSet,
    cyclic_set_audit,
    simplicial_set_audit,
)
from src.core.dtos import AuditReportDTO, OperationResultDTO
from src.core.exceptions import CyclicError
from src.core.groups.ftuples import GroupCyclicStructure, make_cyclic_structure
from src.core.groups.ordered_group import OrderedGroup
from src.core.intervals.interval import FiniteInterval
from src.core.intervals.structures import cyclic_audit
from src.core.realization.action import right_action_audit
from src.core.realization.circle import circle_group_audit, cocycle_identity_audit
from src.core.realization.extension import classification_audit, model_isomorphism_audit
from src.core.realization.reduce import canonical_form_audit
from src.core.registry import ModelRegistry
from src.core.setup import get_application_registry
from src.utils.config import (
    CANONICAL_CHECK_INTERVAL_RANK,
    CANONICAL_CHECK_TRUNCATION,
    DEFAULT_MODEL,
    DEFAULT_NMAX,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


class CyclicFacade:
    """Facade offrant une API simplifiée pour les audits et la classification."""

    def __init__(self, registry: ModelRegistry | None = None):
        """Initialize the facade.

        Args:
            registry: Model registry (the application registry by default)

        """
        self._registry = registry or get_application_registry()

    def resolve_model(self, spec: str = DEFAULT_MODEL) -> OrderedGroup:
        """Ordered-group model named by ``spec``.

        Raises:
            RegistryError: If the model is unknown or its argument invalid

        """
        return self._registry.resolve(spec)

    def structure_of(self, spec: str = DEFAULT_MODEL) -> GroupCyclicStructure:
        """Cyclic structure defined by the model ``spec``."""
        return make_cyclic_structure(self.resolve_model(spec))

    def _run(self, label: str, audit: Callable[[], AuditReportDTO]) -> OperationResultDTO:
        try:
            report = audit()
        except CyclicError as e:
            logger.exception("Failed to run %s", label)
            return OperationResultDTO(success=False, message=f"Failed to run {label}", error_details=e.message)
        message = f"{label} passed" if report.passed else f"{label} found {len(report.failures)} failures"
        return OperationResultDTO(success=report.passed, message=message, report=report)

    def delta_audit(self, n_max: int = DEFAULT_NMAX) -> OperationResultDTO:
        """Relations of Δ up to rank ``n_max``."""
        return self._run("delta audit", lambda: delta_relation_audit(n_max))

    def lambda_audit(self, n_max: int = DEFAULT_NMAX) -> OperationResultDTO:
        """Presentation of Λ up to rank ``n_max``."""
        return self._run("lambda audit", lambda: lambda_presentation_audit(n_max))

    def cyclic_set_audit(self, s: FiniteSimplicialSet) -> OperationResultDTO:
        """Simplicial identities, and the Λ presentation for cyclic sets."""
        if isinstance(s, FiniteCyclicSet):
            return self._run("cyclic set audit", lambda: cyclic_set_audit(s))
        return self._run("simplicial set audit", lambda: simplicial_set_audit(s))

    def structure_audit(
        self,
        spec: str = DEFAULT_MODEL,
        n_max: int = DEFAULT_NMAX,
        samples: int = DEFAULT_SAMPLES,
        seed: int = DEFAULT_SEED,
    ) -> OperationResultDTO:
        """Rotation relations of the structure defined by a model."""
        return self._run("structure audit", lambda: cyclic_audit(self.structure_of(spec), n_max, samples, seed))

    def classify_model(
        self, spec: str = DEFAULT_MODEL, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
    ) -> OperationResultDTO:
        """Build the extension group of a model's structure and compare it with the model."""

        def audit() -> AuditReportDTO:
            model = self.resolve_model(spec)
            cs = make_cyclic_structure(model)
            group, report = classification_audit(cs, samples, seed)
            iso = model_isomorphism_audit(model, cs, group, samples, seed)
            return report.merge(iso, name=f"classify:{model.name}")

        return self._run("classification", audit)

    def cocycle_check(
        self, spec: str = DEFAULT_MODEL, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
    ) -> OperationResultDTO:
        """Cocycle identity, circle law and right action laws on samples."""

        def audit() -> AuditReportDTO:
            cs = self.structure_of(spec)
            report = cocycle_identity_audit(cs, samples, seed)
            report = report.merge(circle_group_audit(cs, samples, seed))
            return report.merge(right_action_audit(cs, samples, seed), name=f"cocycle-check:{cs.group.name}")

        return self._run("cocycle check", audit)

    def canonical_form_check(
        self, truncation: int = CANONICAL_CHECK_TRUNCATION, interval_rank: int = CANONICAL_CHECK_INTERVAL_RANK
    ) -> OperationResultDTO:
        """Canonical forms of |C|_p against the brute-force closure on a finite interval."""
        return self._run(
            "canonical form check",
            lambda: canonical_form_audit(circle_set(truncation), FiniteInterval(interval_rank)),
        )

    def circle_audit(self, c: AbstractCircle) -> OperationResultDTO:
        """Axioms of an abstract circle."""
        return self._run("circle audit", lambda: circle_axiom_audit(c))
