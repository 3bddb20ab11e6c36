"""Chargeur de charges utiles JSON: chemin de fichier, entrée standard ou JSON en ligne."""

import json
import os
import sys
from typing import Any, TextIO

from src.core.exceptions import PayloadError
from src.utils.logger import get_logger

logger = get_logger(__name__)

STDIN_MARKER = "-"


class PayloadLoader:
    """Charge une charge utile JSON donnée sur la ligne de commande."""

    def __init__(self, stdin: TextIO | None = None):
        """Initialize the loader.

        Args:
            stdin: Stream read for the ``-`` marker (defaults to sys.stdin)

        """
        self._stdin = stdin

    def read_text(self, source: str) -> str:
        """Return the raw JSON text designated by ``source``.

        Args:
            source: ``-`` for stdin, inline JSON starting with ``{`` or ``[``, or a file path

        Raises:
            PayloadError: If the file cannot be read

        """
        if source == STDIN_MARKER:
            stream = self._stdin or sys.stdin
            logger.debug("[LOADER] Lecture depuis l'entrée standard")
            return stream.read()
        if source.lstrip().startswith(("{", "[")):
            return source
        if not os.path.exists(source):
            raise PayloadError(f"Payload file not found: {source}")
        try:
            with open(source, encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise PayloadError(f"Failed to read payload: {e}") from e
        logger.debug("[LOADER] %d caractères lus depuis %s", len(text), source)
        return text

    def load(self, source: str) -> Any:
        """Parse the payload designated by ``source``.

        Raises:
            PayloadError: If the text is not valid JSON

        """
        text = self.read_text(source)
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise PayloadError(f"Malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e
        logger.info("[LOADER] Payload chargé (%s)", type(payload).__name__)
        return payload


def is_payload_reference(text: str) -> bool:
    """True when ``text`` designates JSON rather than a morphism expression."""
    stripped = text.lstrip()
    return text == STDIN_MARKER or stripped.startswith(("{", "[")) or stripped.endswith(".json")
