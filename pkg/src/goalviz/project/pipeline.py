"""Pipeline orchestration over a stored project.

Stages: profiling -> specification -> selection -> derivation -> generation.
Each stage failure is re-raised tagged with the stage name so callers can say
where the pipeline stopped.
"""

from __future__ import annotations

import datetime
import logging
from pathlib import Path
from typing import Any

from ..codegen.chartdoc import SUPPORTED_CHART_TYPES, generate_chartdoc
from ..codegen.graphdoc import generate_graphdoc
from ..codegen.html import generate_html
from ..errors import GoalVizError, NoModelError, PipelineStageError
from ..profiling import DataProfile, Dataset, load_dataset, profile_source
from ..requirements.model import VisGoal, match_literal
from ..transform.derive import derive_visualization
from ..transform.rules import select_rule
from ..transform.spec import assemble_spec
from ..transform.validate import (
    ValidationResult,
    build_questionnaire,
    validate_visualization,
)
from ..vismodel.model import GRAPH_FAMILY
from ..vismodel.refine import RefinementOp, apply_refinements
from .store import (
    IterationRecord,
    Project,
    VisualizationEntry,
    atomic_write,
    record_iteration,
    save_project,
)

log = logging.getLogger(__name__)


def _stage(name: str, fn, *args, **kwargs):
    try:
        result = fn(*args, **kwargs)
    except PipelineStageError:
        raise
    except (GoalVizError, OSError) as exc:
        raise PipelineStageError(name, exc) from exc
    log.info("stage %s done", name)
    return result


def load_visualization_dataset(project: Project, vid: str) -> Dataset:
    requirement = project.requirement(vid)
    return load_dataset(project.dataset_path(requirement.sources[0].uri))


def profile_visualization(project: Project, vid: str) -> DataProfile:
    """Profile the visualization's first declared source with the project
    profiler configuration; stores the result on the entry."""
    requirement = project.requirement(vid)

    def run() -> DataProfile:
        dataset = load_dataset(project.dataset_path(requirement.sources[0].uri))
        return profile_source(dataset, requirement.sources[0], project.config)

    profile = _stage("profiling", run)
    project.entry(vid).profile = profile
    return profile


def derive_entry(project: Project, vid: str) -> VisualizationEntry:
    """Profiling through model derivation; persists the updated project."""
    entry = project.entry(vid)
    requirement = project.requirement(vid)
    profile = profile_visualization(project, vid)
    spec = _stage(
        "specification", assemble_spec, requirement, project.goal_model.actor.kind, profile
    )
    rule = _stage("selection", select_rule, spec)
    model = _stage(
        "derivation",
        derive_visualization,
        spec,
        requirement,
        rule.graphic,
        profile.attribute_types,
    )
    entry.spec = spec
    entry.rule_id = rule.rule_id
    entry.graphic_type = rule.graphic
    entry.model = model
    save_project(project)
    return entry


def generate_artifacts(project: Project, vid: str) -> list[str]:
    """Write out/ artifacts for the current model; returns relative paths.
    All content is generated before anything is written."""
    entry = project.entry(vid)
    if entry.model is None:
        raise PipelineStageError(
            "generation", NoModelError(f"{vid}: no derived model; run derive first")
        )
    model = entry.model

    def run() -> list[tuple[str, str]]:
        dataset = load_visualization_dataset(project, vid)
        if model.graphic_type in GRAPH_FAMILY:
            return [(f"out/{vid}.graphdoc.json", generate_graphdoc(model, dataset))]
        chartdoc = generate_chartdoc(model, dataset)
        return [
            (f"out/{vid}.chartdoc.json", chartdoc),
            (f"out/{vid}.html", generate_html(chartdoc)),
        ]

    artifacts = _stage("generation", run)
    for rel_path, text in artifacts:
        atomic_write(project.root / rel_path, text)
    return [rel for rel, _ in artifacts]


def run_pipeline(project: Project, vid: str) -> VisualizationEntry:
    """All stages for one visualization: derive the model, then generate its
    artifacts. Re-running with unchanged inputs rewrites identical bytes."""
    entry = derive_entry(project, vid)
    generate_artifacts(project, vid)
    return entry


def refine_model(
    project: Project, vid: str, ops: list[RefinementOp]
) -> VisualizationEntry:
    """Apply ops transactionally: on any error the stored model is unchanged."""
    entry = project.entry(vid)
    if entry.model is None:
        raise NoModelError(f"{vid}: no derived model; run derive first")
    entry.model = apply_refinements(entry.model, ops)
    save_project(project)
    return entry


def questionnaire(project: Project, vid: str):
    entry = project.entry(vid)
    requirement = project.requirement(vid)
    return build_questionnaire(requirement, entry.information_goal)


def parse_answers(raw: Any) -> dict[VisGoal, bool]:
    """Answers arrive as a JSON object mapping goal names to yes/no values;
    accepts booleans or the strings yes/no (any case)."""
    if not isinstance(raw, dict):
        raise ValueError("answers must be an object mapping goal names to yes/no")
    answers: dict[VisGoal, bool] = {}
    for key, value in raw.items():
        goal = match_literal(VisGoal, str(key))
        if goal is None:
            raise ValueError(f"unknown goal {key!r}")
        if isinstance(value, bool):
            answers[goal] = value
        elif isinstance(value, str) and value.strip().casefold() in {"yes", "no"}:
            answers[goal] = value.strip().casefold() == "yes"
        else:
            raise ValueError(f"answer for {key!r} must be yes or no")
    return answers


def validate_and_record(
    project: Project,
    vid: str,
    answers: dict[VisGoal, bool],
    timestamp: datetime.datetime | None = None,
) -> tuple[ValidationResult, IterationRecord]:
    entry = project.entry(vid)
    requirement = project.requirement(vid)
    if entry.model is None:
        raise NoModelError(f"{vid}: no derived model; run derive first")
    result = validate_visualization(entry.model, requirement, answers, timestamp=timestamp)
    record = record_iteration(project, vid, result)
    save_project(project)
    return result, record


def artifact_path(project: Project, vid: str, suffix: str) -> Path:
    return project.root / "out" / f"{vid}.{suffix}"
