"""Project service: persistence, pipeline orchestration and history."""

from .pipeline import (
    derive_entry,
    generate_artifacts,
    load_visualization_dataset,
    parse_answers,
    profile_visualization,
    questionnaire,
    refine_model,
    run_pipeline,
    validate_and_record,
)
from .store import (
    IterationRecord,
    Project,
    VisualizationEntry,
    init_project,
    load_project,
    project_lock,
    record_iteration,
    save_project,
    slugify,
    visualization_ids,
)

__all__ = [
    "IterationRecord",
    "Project",
    "VisualizationEntry",
    "derive_entry",
    "generate_artifacts",
    "init_project",
    "load_project",
    "load_visualization_dataset",
    "parse_answers",
    "profile_visualization",
    "project_lock",
    "questionnaire",
    "record_iteration",
    "refine_model",
    "run_pipeline",
    "save_project",
    "slugify",
    "validate_and_record",
    "visualization_ids",
]
