"""Mise en forme texte et JSON des résultats de la CLI."""

import json
import sys
from typing import Any, TextIO

from src.core.categories.cyclic import LambdaMap
from src.core.categories.delta import DeltaMap, IntervalMap
from src.core.categories.expressions import format_expression
from src.core.dtos import AuditReportDTO, OperationResultDTO
from src.core.io.codec import morphism_to_json, report_to_json
from src.utils.config import EXIT_AUDIT_FAILURE, EXIT_SUCCESS, EXIT_USAGE_ERROR
from src.utils.logger import get_logger

logger = get_logger(__name__)


def dump_json(obj: Any) -> str:
    """Texte JSON stable (clés dans l'ordre d'insertion, indentation de deux espaces)."""
    return json.dumps(obj, indent=2, ensure_ascii=False)


def format_morphism(f: DeltaMap | LambdaMap | IntervalMap) -> str:
    """Une ligne: catégorie, rangs, valeurs et expression en forme normale."""
    cat = morphism_to_json(f)["cat"]
    line = f"{cat} [{f.source_rank}] -> [{f.target_rank}]: {list(f.values)}"
    if isinstance(f, DeltaMap | LambdaMap):
        line += f"  ({format_expression(f)})"
    return line


def render_morphism(f: DeltaMap | LambdaMap | IntervalMap, fmt: str) -> str:
    """Ligne de texte ou objet JSON."""
    return dump_json(morphism_to_json(f)) if fmt == "json" else format_morphism(f)


def format_report(report: AuditReportDTO) -> str:
    """Ligne de résumé suivie d'une ligne indentée par échec."""
    return "\n".join([report.summary(), *(f"  - {failure}" for failure in report.failures)])


def emit_result(result: OperationResultDTO, fmt: str, out: TextIO, err: TextIO | None = None) -> int:
    """Affiche le rapport d'une opération et renvoie le code de sortie correspondant."""
    if result.report is None:
        (err or sys.stderr).write(f"error: {result.error_details or result.message}\n")
        logger.error("[CLI] %s: %s", result.message, result.error_details)
        return EXIT_USAGE_ERROR
    text = dump_json(report_to_json(result.report)) if fmt == "json" else format_report(result.report)
    out.write(text + "\n")
    return EXIT_SUCCESS if result.report.passed else EXIT_AUDIT_FAILURE
