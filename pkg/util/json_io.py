"""
JSON input and output helpers for the CLI.

Arguments that take a document accept either inline JSON or a path to a
JSON file. Output is always sorted and indented so identical results are
byte-identical.
"""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Optional

from core.exceptions import MalformedInputError

logger = logging.getLogger(__name__)


def load_json_argument(value: str, field: str) -> Any:
    """
    Decode an inline JSON document or the contents of a JSON file.

    Args:
        value: Inline JSON (starting with '{' or '[') or a file path
        field: Argument name used in error messages

    Raises:
        MalformedInputError: If the file is missing, unreadable, not UTF-8 or not JSON
    """
    text = value
    if not value.lstrip().startswith(("{", "[")):
        path = Path(value)
        if not path.is_file():
            raise MalformedInputError(field, f"not inline JSON and no such file: {value}")
        logger.debug(f"Reading {field} from {path}")
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise MalformedInputError(field, f"cannot read {value}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(field, f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from e


def dumps(payload: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(payload, sort_keys=True, indent=2)


def write_output(text: str, path: Optional[str]) -> None:
    """Also write the result document to path, when one is given."""
    if not path:
        return
    Path(path).write_text(text + "\n", encoding="utf-8")
    logger.debug(f"Wrote result to {path}")
