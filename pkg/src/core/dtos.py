"""Data Transfer Objects pour découpler la CLI du Core."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class AuditReportDTO:
    """DTO pour le résultat d'un audit de relations.

    Attributes:
        name: Nom de l'audit (ex: "delta-relations")
        checked: Nombre d'instances vérifiées
        failures: Description de chaque contre-exemple trouvé

    """

    name: str
    checked: int
    failures: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        """True when no counterexample was found."""
        return not self.failures

    def merge(self, other: "AuditReportDTO", name: str | None = None) -> "AuditReportDTO":
        """Combine deux rapports en un seul.

        Args:
            other: Second rapport
            name: Nom du rapport combiné (par défaut celui de self)

        Returns:
            Rapport cumulant instances et échecs

        """
        return AuditReportDTO(
            name=name or self.name,
            checked=self.checked + other.checked,
            failures=self.failures + other.failures,
        )

    def summary(self) -> str:
        """Return the one-line summary printed by the CLI."""
        return f"{self.name}: {self.checked} instances checked, {len(self.failures)} failures"


@dataclass(frozen=True)
class OperationResultDTO:
    """DTO pour le résultat d'une opération."""

    success: bool
    message: str
    error_details: str | None = None
    report: AuditReportDTO | None = None
