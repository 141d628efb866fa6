"""Model-to-model transformation: spec assembly, chart selection, derivation,
and the goal-based validation questionnaire."""

from .derive import derive_axes, derive_visualization
from .rules import SELECTION_RULES, SelectionRule, export_rules, select_graphic_type, select_rule
from .spec import VisualizationSpec, assemble_spec, parse_spec_payload, spec_payload
from .validate import (
    Question,
    ValidationResult,
    ValidationStatus,
    build_questionnaire,
    validate_visualization,
)

__all__ = [
    "SELECTION_RULES",
    "Question",
    "SelectionRule",
    "ValidationResult",
    "ValidationStatus",
    "VisualizationSpec",
    "assemble_spec",
    "build_questionnaire",
    "derive_axes",
    "derive_visualization",
    "export_rules",
    "parse_spec_payload",
    "select_graphic_type",
    "select_rule",
    "spec_payload",
    "validate_visualization",
]
