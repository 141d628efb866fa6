"""File-based project persistence.

A project is a directory: ``project.json`` (manifest with profiles, specs and
history), ``model.goals`` (the requirements DSL, source of truth),
``data/`` (CSV copies), ``models/`` (one canonical JSON file per derived
visualization model) and ``out/`` (generated artifacts). Everything is
plain text and diff-friendly; writes go through a temp file plus rename and
mutating commands hold an exclusive per-project file lock.
"""

from __future__ import annotations

import datetime
import json
import os
import re
import shutil
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from filelock import FileLock

from ..errors import AlreadyExistsError, SchemaError, UnknownVisualizationError
from ..jsonutil import canonical_dumps
from ..profiling import (
    CardinalityClass,
    CardinalityKind,
    DataProfile,
    Dimensionality,
    ProfilerConfig,
    ScaleType,
)
from ..requirements import GoalModel, parse_goal_model
from ..requirements.model import VisGoal
from ..transform.spec import VisualizationSpec, parse_spec_payload, spec_payload
from ..transform.validate import ValidationResult, ValidationStatus
from ..vismodel.jsonio import model_version_token, parse_vis_model, serialize_vis_model
from ..vismodel.model import GraphicType, VisualizationModel

MANIFEST_NAME = "project.json"
GOALS_NAME = "model.goals"
MANIFEST_SCHEMA = "1.0"


def slugify(name: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "-", name.casefold()).strip("-")
    return slug or "visualization"


def visualization_ids(model: GoalModel) -> list[tuple[str, str, str]]:
    """(vid, requirement name, information goal name) per visualization, with
    deterministic -2/-3 suffixes on slug collisions."""
    taken: dict[str, int] = {}
    out = []
    for info_goal, requirement in model.visualizations():
        base = slugify(requirement.name)
        count = taken.get(base, 0) + 1
        taken[base] = count
        vid = base if count == 1 else f"{base}-{count}"
        out.append((vid, requirement.name, info_goal.name))
    return out


@dataclass
class VisualizationEntry:
    """Everything the service tracks for one requirement's visualization."""

    vid: str
    name: str
    information_goal: str
    profile: DataProfile | None = None
    spec: VisualizationSpec | None = None
    graphic_type: GraphicType | None = None
    rule_id: str | None = None
    model: VisualizationModel | None = None
    needs_revision: bool = False

    @property
    def model_version(self) -> str | None:
        return None if self.model is None else model_version_token(self.model)


@dataclass(frozen=True)
class IterationRecord:
    visualization_id: str
    status: ValidationStatus
    failed_goals: tuple[VisGoal, ...]
    model_version: str | None
    timestamp: datetime.datetime


@dataclass
class Project:
    id: str
    root: Path
    goals_text: str
    datasets: list[str]
    entries: dict[str, VisualizationEntry]
    history: list[IterationRecord] = field(default_factory=list)
    config: ProfilerConfig = field(default_factory=ProfilerConfig)
    goal_model: GoalModel = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        self.goal_model = parse_goal_model(self.goals_text)

    def entry(self, vid: str) -> VisualizationEntry:
        try:
            return self.entries[vid]
        except KeyError:
            raise UnknownVisualizationError(f"unknown visualization {vid!r}") from None

    def requirement(self, vid: str):
        entry = self.entry(vid)
        for info_goal, requirement in self.goal_model.visualizations():
            if requirement.name == entry.name and info_goal.name == entry.information_goal:
                return requirement
        raise UnknownVisualizationError(f"goal model no longer defines {vid!r}")

    def dataset_path(self, uri: str) -> Path:
        candidate = self.root / "data" / Path(uri).name
        if candidate.is_file():
            return candidate
        direct = Path(uri)
        if direct.is_absolute() and direct.is_file():
            return direct
        return self.root / uri


def project_lock(root: Path) -> FileLock:
    return FileLock(str(Path(root) / ".goalviz.lock"))


def atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


# --- manifest payloads -------------------------------------------------------


def profile_payload(profile: DataProfile) -> dict[str, Any]:
    return {
        "attribute_types": {k: v.value for k, v in profile.attribute_types.items()},
        "independent_type": None
        if profile.independent_type is None
        else profile.independent_type.value,
        "dependent_type": None
        if profile.dependent_type is None
        else profile.dependent_type.value,
        "cardinality": {
            "kind": profile.cardinality.kind.value,
            "max_distinct": profile.cardinality.max_distinct,
        },
        "dimensionality": profile.dimensionality.value,
    }


def parse_profile_payload(raw: Any) -> DataProfile:
    if not isinstance(raw, dict):
        raise SchemaError("profile: expected an object")
    try:
        types = {
            str(k): ScaleType(v) for k, v in dict(raw["attribute_types"]).items()
        }
        independent = raw["independent_type"]
        dependent = raw["dependent_type"]
        return DataProfile(
            attribute_types=types,
            independent_type=None if independent is None else ScaleType(independent),
            dependent_type=None if dependent is None else ScaleType(dependent),
            cardinality=CardinalityClass(
                kind=CardinalityKind(raw["cardinality"]["kind"]),
                max_distinct=int(raw["cardinality"]["max_distinct"]),
            ),
            dimensionality=Dimensionality(raw["dimensionality"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"profile: malformed payload ({exc})") from exc


def _record_payload(record: IterationRecord) -> dict[str, Any]:
    return {
        "visualization": record.visualization_id,
        "status": record.status.value,
        "failed_goals": [g.value for g in record.failed_goals],
        "model_version": record.model_version,
        "timestamp": record.timestamp.isoformat(),
    }


def _parse_record(raw: Any, index: int) -> IterationRecord:
    path = f"history[{index}]"
    if not isinstance(raw, dict):
        raise SchemaError(f"{path}: expected an object")
    try:
        return IterationRecord(
            visualization_id=str(raw["visualization"]),
            status=ValidationStatus(raw["status"]),
            failed_goals=tuple(VisGoal(g) for g in raw["failed_goals"]),
            model_version=raw["model_version"],
            timestamp=datetime.datetime.fromisoformat(raw["timestamp"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"{path}: malformed payload ({exc})") from exc


def _config_payload(config: ProfilerConfig) -> dict[str, Any]:
    return {
        "cardinality_threshold": config.cardinality_threshold,
        "ordinal_lexicons": [list(lex) for lex in config.ordinal_lexicons],
    }


def manifest_payload(project: Project) -> dict[str, Any]:
    visualizations = {}
    for vid, entry in project.entries.items():
        visualizations[vid] = {
            "name": entry.name,
            "information_goal": entry.information_goal,
            "profile": None if entry.profile is None else profile_payload(entry.profile),
            "spec": None if entry.spec is None else spec_payload(entry.spec),
            "graphic_type": None if entry.graphic_type is None else entry.graphic_type.value,
            "rule": entry.rule_id,
            "model_file": None if entry.model is None else f"models/{vid}.vismodel.json",
            "model_version": entry.model_version,
            "needs_revision": entry.needs_revision,
        }
    return {
        "schema": MANIFEST_SCHEMA,
        "id": project.id,
        "goals_file": GOALS_NAME,
        "datasets": list(project.datasets),
        "profiler": _config_payload(project.config),
        "visualizations": visualizations,
        "history": [_record_payload(r) for r in project.history],
    }


def save_project(project: Project) -> None:
    root = project.root
    root.mkdir(parents=True, exist_ok=True)
    atomic_write(root / GOALS_NAME, project.goals_text)
    for vid, entry in project.entries.items():
        if entry.model is not None:
            atomic_write(
                root / "models" / f"{vid}.vismodel.json",
                serialize_vis_model(entry.model),
            )
    atomic_write(root / MANIFEST_NAME, canonical_dumps(manifest_payload(project)))


def load_project(root: Path | str) -> Project:
    root = Path(root)
    manifest_path = root / MANIFEST_NAME
    if not manifest_path.is_file():
        raise FileNotFoundError(f"{manifest_path} does not exist; not a project directory")
    try:
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{MANIFEST_NAME}: not valid JSON: {exc}") from exc
    if not isinstance(manifest, dict):
        raise SchemaError(f"{MANIFEST_NAME}: expected an object")
    goals_text = (root / str(manifest.get("goals_file", GOALS_NAME))).read_text("utf-8")
    config = ProfilerConfig(
        cardinality_threshold=int(
            manifest.get("profiler", {}).get("cardinality_threshold", 50)
        ),
        ordinal_lexicons=tuple(
            tuple(str(t) for t in lex)
            for lex in manifest.get("profiler", {}).get("ordinal_lexicons", [])
        )
        or ProfilerConfig().ordinal_lexicons,
    )
    entries: dict[str, VisualizationEntry] = {}
    raw_vis = manifest.get("visualizations", {})
    if not isinstance(raw_vis, dict):
        raise SchemaError("visualizations: expected an object")
    for vid, raw in raw_vis.items():
        if not isinstance(raw, dict):
            raise SchemaError(f"visualizations[{vid}]: expected an object")
        model = None
        model_file = raw.get("model_file")
        if model_file is not None:
            model = parse_vis_model((root / str(model_file)).read_text("utf-8"))
        entries[vid] = VisualizationEntry(
            vid=vid,
            name=str(raw["name"]),
            information_goal=str(raw["information_goal"]),
            profile=None if raw.get("profile") is None else parse_profile_payload(raw["profile"]),
            spec=None if raw.get("spec") is None else parse_spec_payload(raw["spec"]),
            graphic_type=None
            if raw.get("graphic_type") is None
            else GraphicType(raw["graphic_type"]),
            rule_id=raw.get("rule"),
            model=model,
            needs_revision=bool(raw.get("needs_revision", False)),
        )
    history = [_parse_record(r, i) for i, r in enumerate(manifest.get("history", []))]
    return Project(
        id=str(manifest.get("id", root.name)),
        root=root,
        goals_text=goals_text,
        datasets=[str(d) for d in manifest.get("datasets", [])],
        entries=entries,
        history=history,
        config=config,
    )


def init_project(
    root: Path | str,
    goals_text: str,
    dataset_paths: dict[str, Path | str] | None = None,
    project_id: str | None = None,
    config: ProfilerConfig | None = None,
    dataset_contents: dict[str, str] | None = None,
) -> Project:
    """Create the directory layout. The goal text is parsed (and its
    diagnostics raised) before anything touches the filesystem.

    ``dataset_paths`` maps stored file names (placed under ``data/``) to
    source files to copy in; ``dataset_contents`` maps stored file names to
    raw text (the upload path).
    """
    root = Path(root)
    if (root / MANIFEST_NAME).exists():
        raise AlreadyExistsError(f"project already initialized at {root}")
    goal_model = parse_goal_model(goals_text)
    entries = {
        vid: VisualizationEntry(vid=vid, name=name, information_goal=goal)
        for vid, name, goal in visualization_ids(goal_model)
    }
    datasets: list[str] = []
    root.mkdir(parents=True, exist_ok=True)
    for stored_name, source in (dataset_paths or {}).items():
        target = root / "data" / stored_name
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copyfile(source, target)
        datasets.append(f"data/{stored_name}")
    for stored_name, text in (dataset_contents or {}).items():
        atomic_write(root / "data" / stored_name, text)
        datasets.append(f"data/{stored_name}")
    project = Project(
        id=project_id or root.name,
        root=root,
        goals_text=goals_text,
        datasets=datasets,
        entries=entries,
        config=config or ProfilerConfig(),
    )
    save_project(project)
    return project


def record_iteration(
    project: Project, vid: str, result: ValidationResult
) -> IterationRecord:
    """Append one history record; RequiresRevision flags the visualization.
    History timestamps are kept non-decreasing even if the caller's clock
    steps backwards."""
    entry = project.entry(vid)
    timestamp = result.timestamp
    if project.history and timestamp < project.history[-1].timestamp:
        timestamp = project.history[-1].timestamp
    record = IterationRecord(
        visualization_id=vid,
        status=result.status,
        failed_goals=result.failed_goals,
        model_version=entry.model_version,
        timestamp=timestamp,
    )
    project.history.append(record)
    entry.needs_revision = result.status is ValidationStatus.REQUIRES_REVISION
    return record
