"""HTTP API consumed by the browser refinement client.

All routes live under ``/api/v1``. Handlers are stateless: every request
loads the project fresh from disk, and mutations run under the per-project
file lock, so any number of workers can share a projects directory.

Error shape: 400 carries ``{"detail", "diagnostics": [...]}``; 404 unknown
ids; 409 for an already-existing project or a stale model version token.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

from fastapi import FastAPI, HTTPException, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import HTMLResponse
from pydantic import BaseModel, Field

from .codegen.chartdoc import generate_chartdoc
from .codegen.graphdoc import generate_graphdoc
from .codegen.html import generate_html
from .diagnostics import Diagnostic
from .errors import (
    AlreadyExistsError,
    GoalVizError,
    NoModelError,
    PipelineStageError,
    UnknownVisualizationError,
)
from .project import pipeline, store
from .transform.spec import spec_payload
from .vismodel.jsonio import model_payload, parse_op
from .vismodel.model import GRAPH_FAMILY

API_PREFIX = "/api/v1"


class CreateProjectBody(BaseModel):
    goals: str
    id: str | None = None
    datasets: dict[str, str] = Field(default_factory=dict)


class PatchModelBody(BaseModel):
    base_version: str
    ops: list[dict[str, Any]]


class ValidateBody(BaseModel):
    answers: dict[str, Any]


def _diagnostic_payload(diagnostic: Diagnostic) -> dict[str, Any]:
    return {
        "code": diagnostic.code,
        "message": diagnostic.message,
        "line": diagnostic.line,
        "column": diagnostic.column,
        "path": diagnostic.path,
    }


def _bad_request(exc: BaseException) -> HTTPException:
    diagnostics = getattr(exc, "diagnostics", None)
    if diagnostics:
        payload = [_diagnostic_payload(d) for d in diagnostics]
    else:
        payload = [{"code": "error", "message": str(exc), "line": None, "column": None, "path": None}]
    return HTTPException(
        status_code=400, detail={"message": str(exc), "diagnostics": payload}
    )


def _translate(exc: BaseException) -> HTTPException:
    if isinstance(exc, PipelineStageError):
        # The route exists; the pipeline failed while handling the request.
        inner = _bad_request(exc.cause)
        inner.detail["stage"] = exc.stage
        return inner
    if isinstance(exc, (UnknownVisualizationError, NoModelError, FileNotFoundError)):
        return HTTPException(status_code=404, detail=str(exc))
    if isinstance(exc, AlreadyExistsError):
        return HTTPException(status_code=409, detail=str(exc))
    if isinstance(exc, (GoalVizError, OSError, ValueError)):
        return _bad_request(exc)
    raise exc


def _record_payload(record: store.IterationRecord) -> dict[str, Any]:
    return {
        "visualization": record.visualization_id,
        "status": record.status.value,
        "failed_goals": [g.value for g in record.failed_goals],
        "model_version": record.model_version,
        "timestamp": record.timestamp.isoformat(),
    }


def _entry_view(project: store.Project, entry: store.VisualizationEntry) -> dict[str, Any]:
    last = None
    for record in reversed(project.history):
        if record.visualization_id == entry.vid:
            last = _record_payload(record)
            break
    return {
        "vid": entry.vid,
        "name": entry.name,
        "information_goal": entry.information_goal,
        "spec": None if entry.spec is None else spec_payload(entry.spec),
        "graphic_type": None if entry.graphic_type is None else entry.graphic_type.value,
        "rule": entry.rule_id,
        "model_version": entry.model_version,
        "needs_revision": entry.needs_revision,
        "last_validation": last,
    }


def _project_view(project: store.Project) -> dict[str, Any]:
    return {
        "id": project.id,
        "datasets": list(project.datasets),
        "visualizations": {
            vid: _entry_view(project, entry) for vid, entry in project.entries.items()
        },
        "history": [_record_payload(r) for r in project.history],
    }


def create_app(projects_root: Path | str) -> FastAPI:
    projects_root = Path(projects_root)
    projects_root.mkdir(parents=True, exist_ok=True)
    app = FastAPI(title="goalviz", version="1.0")
    # The refinement client is served separately during development.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def project_dir(project_id: str) -> Path:
        if store.slugify(project_id) != project_id:
            raise HTTPException(status_code=404, detail=f"unknown project {project_id!r}")
        return projects_root / project_id

    def load(project_id: str) -> store.Project:
        path = project_dir(project_id)
        if not (path / store.MANIFEST_NAME).is_file():
            raise HTTPException(status_code=404, detail=f"unknown project {project_id!r}")
        try:
            return store.load_project(path)
        except (GoalVizError, OSError) as exc:
            raise _translate(exc) from exc

    @app.post(f"{API_PREFIX}/projects", status_code=201)
    def create_project(body: CreateProjectBody) -> dict[str, Any]:
        project_id = store.slugify(body.id) if body.id else "project"
        try:
            with store.project_lock(projects_root):
                project = store.init_project(
                    projects_root / project_id,
                    body.goals,
                    project_id=project_id,
                    dataset_contents=body.datasets,
                )
        except (GoalVizError, OSError) as exc:
            raise _translate(exc) from exc
        return _project_view(project)

    @app.get(API_PREFIX + "/projects/{project_id}")
    def get_project(project_id: str) -> dict[str, Any]:
        return _project_view(load(project_id))

    @app.post(API_PREFIX + "/projects/{project_id}/visualizations/{vid}/derive")
    def derive(project_id: str, vid: str) -> dict[str, Any]:
        with store.project_lock(project_dir(project_id)):
            project = load(project_id)
            try:
                entry = pipeline.derive_entry(project, vid)
            except (GoalVizError, OSError) as exc:
                raise _translate(exc) from exc
        view = _entry_view(project, entry)
        view["model"] = model_payload(entry.model)
        return view

    @app.get(API_PREFIX + "/projects/{project_id}/visualizations/{vid}/model")
    def get_model(project_id: str, vid: str) -> dict[str, Any]:
        project = load(project_id)
        try:
            entry = project.entry(vid)
        except UnknownVisualizationError as exc:
            raise _translate(exc) from exc
        if entry.model is None:
            raise HTTPException(status_code=404, detail=f"{vid} has no derived model")
        return {"version": entry.model_version, "model": model_payload(entry.model)}

    @app.patch(API_PREFIX + "/projects/{project_id}/visualizations/{vid}/model")
    def patch_model(project_id: str, vid: str, body: PatchModelBody) -> dict[str, Any]:
        with store.project_lock(project_dir(project_id)):
            project = load(project_id)
            try:
                entry = project.entry(vid)
            except UnknownVisualizationError as exc:
                raise _translate(exc) from exc
            if entry.model is None:
                raise HTTPException(status_code=404, detail=f"{vid} has no derived model")
            if entry.model_version != body.base_version:
                raise HTTPException(
                    status_code=409,
                    detail={
                        "message": "stale model version",
                        "current_version": entry.model_version,
                    },
                )
            try:
                ops = [parse_op(raw, f"$.ops[{i}]") for i, raw in enumerate(body.ops)]
                entry = pipeline.refine_model(project, vid, ops)
            except (GoalVizError, ValueError) as exc:
                raise _translate(exc) from exc
        return {"version": entry.model_version, "model": model_payload(entry.model)}

    @app.get(API_PREFIX + "/projects/{project_id}/visualizations/{vid}/questionnaire")
    def get_questionnaire(project_id: str, vid: str) -> dict[str, Any]:
        project = load(project_id)
        try:
            questions = pipeline.questionnaire(project, vid)
        except UnknownVisualizationError as exc:
            raise _translate(exc) from exc
        return {
            "questions": [{"goal": q.goal.value, "text": q.text} for q in questions]
        }

    @app.post(API_PREFIX + "/projects/{project_id}/visualizations/{vid}/validate")
    def validate(project_id: str, vid: str, body: ValidateBody) -> dict[str, Any]:
        with store.project_lock(project_dir(project_id)):
            project = load(project_id)
            try:
                answers = pipeline.parse_answers(body.answers)
                result, record = pipeline.validate_and_record(project, vid, answers)
            except (GoalVizError, ValueError) as exc:
                raise _translate(exc) from exc
            entry = project.entry(vid)
        return {
            "status": result.status.value,
            "failed_goals": [g.value for g in result.failed_goals],
            "timestamp": result.timestamp.isoformat(),
            "needs_revision": entry.needs_revision,
            "record": _record_payload(record),
        }

    def _doc_text(project_id: str, vid: str, allow_graph: bool) -> str:
        project = load(project_id)
        try:
            entry = project.entry(vid)
        except UnknownVisualizationError as exc:
            raise _translate(exc) from exc
        if entry.model is None:
            raise HTTPException(status_code=404, detail=f"{vid} has no derived model")
        try:
            dataset = pipeline.load_visualization_dataset(project, vid)
            if allow_graph and entry.model.graphic_type in GRAPH_FAMILY:
                return generate_graphdoc(entry.model, dataset)
            return generate_chartdoc(entry.model, dataset)
        except (GoalVizError, OSError) as exc:
            raise _translate(exc) from exc

    @app.get(API_PREFIX + "/projects/{project_id}/visualizations/{vid}/chartdoc")
    def get_chartdoc(project_id: str, vid: str) -> Response:
        return Response(
            content=_doc_text(project_id, vid, allow_graph=True),
            media_type="application/json",
        )

    @app.get(API_PREFIX + "/projects/{project_id}/visualizations/{vid}/render")
    def get_render(project_id: str, vid: str) -> HTMLResponse:
        return HTMLResponse(
            content=generate_html(_doc_text(project_id, vid, allow_graph=False))
        )

    return app
