"""Project persistence and pipeline orchestration: directory layout,
save/load fidelity, artifact generation, transactional refinement, and the
iteration history."""

from __future__ import annotations

import datetime
import json
import random
import textwrap

import pytest

from conftest import DATASETS, GOALS_TEXT, REFINE_OPS
from goalviz.errors import (
    AlreadyExistsError,
    GoalDslError,
    NoModelError,
    PipelineStageError,
    SchemaError,
    UnknownVisualizationError,
    UnsupportedGraphicTypeError,
)
from goalviz.project import (
    derive_entry,
    generate_artifacts,
    init_project,
    load_project,
    record_iteration,
    refine_model,
    run_pipeline,
    validate_and_record,
)
from goalviz.project.pipeline import artifact_path
from goalviz.project.store import manifest_payload, visualization_ids
from goalviz.requirements import parse_goal_model
from goalviz.requirements.model import VisGoal
from goalviz.transform.validate import ValidationResult, ValidationStatus
from goalviz.vismodel import Channel, GraphicType, Orientation, SetChannel, SetOrientation

ALL_VIDS = [
    "unpaid-bills-by-type",
    "unpaid-bills-by-place",
    "unpaid-bills-by-payer",
    "unpaid-bills-over-time",
]

BY_TYPE = ALL_VIDS[0]


# --- initialization and layout -----------------------------------------------


def test_init_creates_expected_layout(sample_project):
    root = sample_project.root
    assert (root / "project.json").is_file()
    assert (root / "model.goals").read_text(encoding="utf-8") == GOALS_TEXT
    for name, text in DATASETS.items():
        assert (root / "data" / name).read_text(encoding="utf-8") == text
    assert list(sample_project.entries) == ALL_VIDS
    assert sample_project.datasets == [f"data/{name}" for name in DATASETS]
    assert sample_project.history == []


def test_init_rejects_bad_goals_before_touching_disk(tmp_path):
    target = tmp_path / "broken"
    with pytest.raises(GoalDslError):
        init_project(target, "actor")
    assert not target.exists()


def test_reinitialization_is_rejected(sample_project):
    with pytest.raises(AlreadyExistsError):
        init_project(sample_project.root, GOALS_TEXT)


def test_init_copies_dataset_files(tmp_path):
    source = tmp_path / "upload.csv"
    source.write_text(DATASETS["bills.csv"], encoding="utf-8")
    project = init_project(
        tmp_path / "copied", GOALS_TEXT, dataset_paths={"bills.csv": source}
    )
    assert (project.root / "data" / "bills.csv").read_text(
        encoding="utf-8"
    ) == DATASETS["bills.csv"]
    assert project.datasets == ["data/bills.csv"]


def test_colliding_visualization_names_get_numeric_suffixes():
    body = """\
            goals: Trend
            interactions: Overview
            source "s.csv" { category "A" measure "B" }
    """
    text = textwrap.dedent(
        f"""\
        actor "A" Lay
        process "P"
        strategic "S" {{
          analysis Descriptive {{
            decision "D" {{
              information "First" {{
                visualization "Sales" {{
        {body}        }}
              }}
              information "Second" {{
                visualization "Sales" {{
        {body}        }}
              }}
            }}
          }}
        }}
        """
    )
    ids = visualization_ids(parse_goal_model(text))
    assert [vid for vid, _, _ in ids] == ["sales", "sales-2"]


# --- save/load fidelity -------------------------------------------------------


def test_save_load_round_trip(sample_project):
    derive_entry(sample_project, BY_TYPE)
    validate_and_record(
        sample_project,
        BY_TYPE,
        {VisGoal.COMPOSITION: True, VisGoal.COMPARISON: False},
    )
    loaded = load_project(sample_project.root)
    assert manifest_payload(loaded) == manifest_payload(sample_project)
    assert loaded.entry(BY_TYPE).model == sample_project.entry(BY_TYPE).model
    assert loaded.history == sample_project.history
    assert loaded.goals_text == GOALS_TEXT


def test_load_requires_a_manifest(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_project(tmp_path / "nowhere")


def test_load_rejects_a_corrupt_manifest(sample_project):
    (sample_project.root / "project.json").write_text("{oops", encoding="utf-8")
    with pytest.raises(SchemaError, match="not valid JSON"):
        load_project(sample_project.root)


# --- pipeline stages ----------------------------------------------------------


def test_run_pipeline_writes_model_and_artifacts(sample_project):
    entry = run_pipeline(sample_project, BY_TYPE)
    assert entry.graphic_type is GraphicType.STACKED_COLUMN_CHART
    assert entry.rule_id == "R5"
    root = sample_project.root
    assert (root / "models" / f"{BY_TYPE}.vismodel.json").is_file()
    chartdoc_file = artifact_path(sample_project, BY_TYPE, "chartdoc.json")
    html_file = artifact_path(sample_project, BY_TYPE, "html")
    doc = json.loads(chartdoc_file.read_text(encoding="utf-8"))
    assert doc["graphic_type"] == "stacked_column_chart"
    assert html_file.read_text(encoding="utf-8").startswith("<!DOCTYPE html>")


def test_rerunning_the_pipeline_is_byte_stable(sample_project):
    run_pipeline(sample_project, BY_TYPE)
    paths = [
        sample_project.root / "project.json",
        sample_project.root / "models" / f"{BY_TYPE}.vismodel.json",
        artifact_path(sample_project, BY_TYPE, "chartdoc.json"),
        artifact_path(sample_project, BY_TYPE, "html"),
    ]
    before = [p.read_bytes() for p in paths]
    run_pipeline(load_project(sample_project.root), BY_TYPE)
    assert [p.read_bytes() for p in paths] == before


def test_choropleth_has_no_generated_artifact(sample_project):
    vid = "unpaid-bills-by-place"
    entry = derive_entry(sample_project, vid)
    assert entry.graphic_type is GraphicType.CHOROPLETH_MAP
    with pytest.raises(PipelineStageError) as excinfo:
        generate_artifacts(sample_project, vid)
    assert excinfo.value.stage == "generation"
    assert isinstance(excinfo.value.cause, UnsupportedGraphicTypeError)


def test_graph_family_produces_a_graphdoc(tmp_path):
    goals = textwrap.dedent(
        """\
        actor "Analyst" Tech
        process "Org review"
        strategic "Understand reporting lines" {
          analysis Descriptive {
            decision "Reshape departments" {
              information "See the unit hierarchy" {
                visualization "Unit hierarchy" {
                  goals: Composition
                  interactions: Overview
                  source "org.csv" {
                    category "Unit"
                    shape Tree("Parent", "Unit")
                  }
                }
              }
            }
          }
        }
        """
    )
    org_csv = "Unit,Parent\nCouncil,\nFinance,Council\nParks,Council\n"
    project = init_project(
        tmp_path / "org", goals, dataset_contents={"org.csv": org_csv}
    )
    entry = run_pipeline(project, "unit-hierarchy")
    assert entry.graphic_type is GraphicType.TREEMAP
    graphdoc_file = artifact_path(project, "unit-hierarchy", "graphdoc.json")
    payload = json.loads(graphdoc_file.read_text(encoding="utf-8"))
    assert [n["id"] for n in payload["nodes"]] == ["Council", "Finance", "Parks"]
    assert payload["edges"] == [
        {"source": "Council", "target": "Finance"},
        {"source": "Council", "target": "Parks"},
    ]
    assert not artifact_path(project, "unit-hierarchy", "html").exists()


def test_missing_dataset_fails_in_the_profiling_stage(tmp_path):
    project = init_project(tmp_path / "nodata", GOALS_TEXT)
    with pytest.raises(PipelineStageError) as excinfo:
        derive_entry(project, BY_TYPE)
    assert excinfo.value.stage == "profiling"
    assert isinstance(excinfo.value.cause, OSError)


def test_generation_requires_a_model(sample_project):
    with pytest.raises(PipelineStageError) as excinfo:
        generate_artifacts(sample_project, BY_TYPE)
    assert excinfo.value.stage == "generation"
    assert isinstance(excinfo.value.cause, NoModelError)


def test_artifact_path_layout(sample_project):
    path = artifact_path(sample_project, BY_TYPE, "chartdoc.json")
    assert path == sample_project.root / "out" / f"{BY_TYPE}.chartdoc.json"


# --- refinement over the store ------------------------------------------------


def test_refine_model_persists_the_new_model(sample_project):
    derive_entry(sample_project, BY_TYPE)
    entry = refine_model(sample_project, BY_TYPE, list(REFINE_OPS))
    assert entry.model.body.axis_for("Province").channel is Channel.X
    loaded = load_project(sample_project.root)
    assert loaded.entry(BY_TYPE).model == entry.model
    assert loaded.entry(BY_TYPE).model_version == entry.model_version


def test_refinement_errors_leave_the_stored_model_unchanged(sample_project):
    derive_entry(sample_project, BY_TYPE)
    before = load_project(sample_project.root).entry(BY_TYPE).model_version
    ops = [
        SetOrientation(Orientation.HORIZONTAL),
        SetChannel(attribute="Nonexistent", channel=Channel.X),
    ]
    with pytest.raises(Exception):
        refine_model(sample_project, BY_TYPE, ops)
    assert sample_project.entry(BY_TYPE).model_version == before
    assert load_project(sample_project.root).entry(BY_TYPE).model_version == before


def test_refinement_requires_a_derived_model(sample_project):
    with pytest.raises(NoModelError, match="run derive first"):
        refine_model(sample_project, BY_TYPE, [SetOrientation(Orientation.HORIZONTAL)])


# --- iteration history ----------------------------------------------------------


def test_validation_outcomes_are_recorded(sample_project):
    derive_entry(sample_project, BY_TYPE)
    result, record = validate_and_record(
        sample_project,
        BY_TYPE,
        {VisGoal.COMPOSITION: True, VisGoal.COMPARISON: False},
    )
    assert result.status is ValidationStatus.REQUIRES_REVISION
    assert record.failed_goals == (VisGoal.COMPARISON,)
    assert record.model_version == sample_project.entry(BY_TYPE).model_version
    assert len(sample_project.history) == 1
    assert sample_project.entry(BY_TYPE).needs_revision is True

    result, _record = validate_and_record(
        sample_project,
        BY_TYPE,
        {VisGoal.COMPOSITION: True, VisGoal.COMPARISON: True},
    )
    assert result.status is ValidationStatus.VALIDATED
    assert len(sample_project.history) == 2
    assert sample_project.entry(BY_TYPE).needs_revision is False


def test_recording_for_an_unknown_visualization_fails(sample_project):
    result = ValidationResult(
        status=ValidationStatus.VALIDATED,
        failed_goals=(),
        timestamp=datetime.datetime(2026, 1, 1),
    )
    with pytest.raises(UnknownVisualizationError):
        record_iteration(sample_project, "no-such-vis", result)


def test_history_timestamps_never_step_backwards(sample_project):
    derive_entry(sample_project, BY_TYPE)
    later = datetime.datetime(2026, 5, 2, 12, 0, 0)
    earlier = datetime.datetime(2026, 5, 1, 9, 0, 0)
    answers = {VisGoal.COMPOSITION: True, VisGoal.COMPARISON: True}
    validate_and_record(sample_project, BY_TYPE, answers, timestamp=later)
    _result, record = validate_and_record(
        sample_project, BY_TYPE, answers, timestamp=earlier
    )
    assert record.timestamp == later
    stamps = [r.timestamp for r in sample_project.history]
    assert stamps == sorted(stamps)


def test_history_is_append_only_under_random_operations(sample_project):
    rng = random.Random(20260814)
    answer_sets = {
        BY_TYPE: [VisGoal.COMPOSITION, VisGoal.COMPARISON],
        "unpaid-bills-by-payer": [VisGoal.ORDER, VisGoal.COMPARISON],
        "unpaid-bills-over-time": [VisGoal.TREND],
    }
    for vid in answer_sets:
        derive_entry(sample_project, vid)
    for _ in range(100):
        vid = rng.choice(list(answer_sets))
        answers = {goal: rng.random() < 0.5 for goal in answer_sets[vid]}
        prefix = list(sample_project.history)
        validate_and_record(sample_project, vid, answers)
        assert sample_project.history[: len(prefix)] == prefix
        assert len(sample_project.history) == len(prefix) + 1
    loaded = load_project(sample_project.root)
    assert loaded.history == sample_project.history
