"""Deterministic JSON emission shared by model and document serializers."""

from __future__ import annotations

import json
from typing import Any


def normalize_numbers(value: Any) -> Any:
    """Collapse integral floats to ints so output bytes never depend on
    whether a number arrived as 3 or 3.0."""
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        if value.is_integer():
            return int(value)
        return value
    if isinstance(value, dict):
        return {k: normalize_numbers(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [normalize_numbers(v) for v in value]
    return value


def canonical_dumps(payload: Any, *, escape_lt: bool = False) -> str:
    """Serialize with a fixed layout: insertion key order, 2-space indent,
    LF endings, one trailing newline.

    ``escape_lt`` rewrites ``<`` as ``\\u003c`` so the text can sit verbatim
    inside an HTML <script> element without changing bytes.
    """
    text = json.dumps(normalize_numbers(payload), indent=2, ensure_ascii=False)
    if escape_lt:
        # "<" can only occur inside JSON strings, so this is injective.
        text = text.replace("<", "\\u003c")
    return text + "\n"
