"""Diagnostics shared by the DSL parser, model validators, and the service layer."""

from __future__ import annotations

from dataclasses import dataclass

# Diagnostic codes. Parsing and validation never raise on bad *content*; they
# collect diagnostics carrying one of these codes plus a position or node path.
SYNTAX = "syntax"
MISSING_BUSINESS_PROCESS = "missing_business_process"
EMPTY_MULTIPLICITY = "empty_multiplicity"
UNKNOWN_LITERAL = "unknown_literal"
DUPLICATE_ATTRIBUTE = "duplicate_attribute"
INVARIANT = "invariant"
SCHEMA = "schema"


@dataclass(frozen=True)
class Diagnostic:
    """A single problem report.

    ``line``/``column`` are 1-based and set for textual sources; ``path`` is a
    dotted node path (e.g. ``strategic[0].analyses[0]``) for model-level checks.
    """

    code: str
    message: str
    line: int | None = None
    column: int | None = None
    path: str | None = None

    def __str__(self) -> str:
        where = ""
        if self.line is not None:
            where = f"{self.line}:{self.column or 0}: "
        elif self.path:
            where = f"{self.path}: "
        return f"{where}{self.message} [{self.code}]"
