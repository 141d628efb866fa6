"""Command line interface.

Exit codes: 0 success, 1 domain diagnostics (bad input, failed validation of
content), 2 I/O errors (missing files, unreadable data).
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from . import __version__
from .diagnostics import Diagnostic
from .errors import GoalVizError, PipelineStageError
from .jsonutil import canonical_dumps
from .profiling import ProfilerConfig
from .project import pipeline, store
from .requirements import parse_goal_model, serialize_goal_model
from .requirements.model import (
    ActorKind,
    AnalysisKind,
    AnalysisType,
    BusinessProcess,
    DatasourceResource,
    DecisionGoal,
    GoalModel,
    InformationGoal,
    Interaction,
    StrategicGoal,
    VisGoal,
    VisualizationActor,
    VisualizationRequirement,
    literal,
    match_literal,
)
from .transform.rules import export_rules
from .vismodel.jsonio import decode_ops, model_version_token, serialize_vis_model


def _echo_diagnostics(diagnostics: list[Diagnostic]) -> None:
    for diagnostic in diagnostics:
        click.echo(str(diagnostic), err=True)


def _fail(exc: BaseException) -> "click.exceptions.Exit":
    """Print the error and translate it to the documented exit code."""
    if isinstance(exc, PipelineStageError):
        click.echo(f"error in stage {exc.stage}: {exc.cause}", err=True)
        code = 2 if isinstance(exc.cause, OSError) else 1
        return click.exceptions.Exit(code)
    diagnostics = getattr(exc, "diagnostics", None)
    if diagnostics:
        _echo_diagnostics(diagnostics)
    else:
        click.echo(f"error: {exc}", err=True)
    return click.exceptions.Exit(2 if isinstance(exc, OSError) else 1)


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (GoalVizError, OSError, ValueError) as exc:
            raise _fail(exc) from exc

    return wrapper


@click.group()
@click.version_option(version=__version__, prog_name="goalviz")
def main() -> None:
    """Goal-driven visualization toolchain: from an analytics requirements
    model and CSV data to refined, validated chart artifacts."""


def _load(project_dir: str) -> store.Project:
    return store.load_project(Path(project_dir))


def _vis_ids(project: store.Project, vis: str | None) -> list[str]:
    if vis is None:
        return list(project.entries)
    project.entry(vis)
    return [vis]


# --- init --------------------------------------------------------------------


def _prompt_goal_model() -> GoalModel:
    """Scaffold a single-visualization goal model from a question sequence."""
    click.echo("Answer a few questions to scaffold the goals file.")
    actor_name = click.prompt("Who is the visualization for (actor name)")
    kind_text = click.prompt("Is that user Lay or Tech", default="Lay")
    kind = match_literal(ActorKind, kind_text) or ActorKind.LAY
    process = click.prompt("Which business process is being analyzed")
    strategic = click.prompt("Strategic goal")
    analysis_text = click.prompt(
        "Analysis type (Descriptive/Diagnostic/Predictive/Prescriptive)",
        default="Descriptive",
    )
    analysis = match_literal(AnalysisKind, analysis_text) or AnalysisKind.DESCRIPTIVE
    decision = click.prompt("Decision goal")
    information = click.prompt("Information goal")
    vis_name = click.prompt("Visualization name", default=information)
    goals_text = click.prompt(
        "Visualization goals (comma separated: "
        + ", ".join(literal(g) for g in VisGoal)
        + ")"
    )
    goals = []
    for part in goals_text.split(","):
        goal = match_literal(VisGoal, part.strip())
        if goal is None:
            raise click.UsageError(f"unknown visualization goal {part.strip()!r}")
        if goal not in goals:
            goals.append(goal)
    interactions_text = click.prompt(
        "Interactions (comma separated: "
        + ", ".join(literal(i) for i in Interaction)
        + ")",
        default="Overview",
    )
    interactions = []
    for part in interactions_text.split(","):
        interaction = match_literal(Interaction, part.strip())
        if interaction is None:
            raise click.UsageError(f"unknown interaction {part.strip()!r}")
        if interaction not in interactions:
            interactions.append(interaction)
    uri = click.prompt("Data file name (CSV)")
    categories = [
        c.strip()
        for c in click.prompt("Category columns (comma separated)", default="").split(",")
        if c.strip()
    ]
    measures = [
        m.strip()
        for m in click.prompt("Measure columns (comma separated)", default="").split(",")
        if m.strip()
    ]
    requirement = VisualizationRequirement(
        name=vis_name,
        goals=tuple(goals),
        interactions=tuple(interactions),
        sources=(
            DatasourceResource(
                uri=uri, categories=tuple(categories), measures=tuple(measures)
            ),
        ),
    )
    return GoalModel(
        actor=VisualizationActor(name=actor_name, kind=kind),
        process=BusinessProcess(name=process),
        strategic_goals=(
            StrategicGoal(
                name=strategic,
                analyses=(
                    AnalysisType(
                        kind=analysis,
                        decision_goals=(
                            DecisionGoal(
                                name=decision,
                                information_goals=(
                                    InformationGoal(
                                        name=information, visualization=requirement
                                    ),
                                ),
                            ),
                        ),
                    ),
                ),
            ),
        ),
    )


@main.command()
@click.argument("project_dir", type=click.Path(path_type=Path))
@click.option("--goals", "goals_file", type=click.Path(exists=True, path_type=Path),
              help="Requirements DSL file to copy in.")
@click.option("--data", "data_files", type=click.Path(exists=True, path_type=Path),
              multiple=True, help="CSV file to copy into data/ (repeatable).")
@click.option("--id", "project_id", default=None, help="Project id (defaults to directory name).")
@click.option("--config", "config_file", type=click.Path(exists=True, path_type=Path),
              default=None, help="Profiler configuration JSON.")
@click.option("--interactive", is_flag=True, help="Scaffold the goals file from prompts.")
@_guarded
def init(project_dir: Path, goals_file: Path | None, data_files: tuple[Path, ...],
         project_id: str | None, config_file: Path | None, interactive: bool) -> None:
    """Create a project directory from a goals file and datasets."""
    if interactive:
        goals_text = serialize_goal_model(_prompt_goal_model())
    elif goals_file is not None:
        goals_text = goals_file.read_text(encoding="utf-8")
    else:
        raise click.UsageError("provide --goals FILE or use --interactive")
    config = ProfilerConfig.from_file(config_file) if config_file else None
    project = store.init_project(
        project_dir,
        goals_text,
        dataset_paths={p.name: p for p in data_files},
        project_id=project_id,
        config=config,
    )
    click.echo(f"initialized project {project.id!r} with {len(project.entries)} visualization(s)")
    for vid, entry in project.entries.items():
        click.echo(f"  {vid}: {entry.name}")


# --- pipeline commands ---------------------------------------------------------


@main.command()
@click.argument("project_dir", type=click.Path(exists=True, path_type=Path))
@click.argument("vis", required=False)
@_guarded
def profile(project_dir: Path, vis: str | None) -> None:
    """Profile the data source of one visualization (or all)."""
    with store.project_lock(project_dir):
        project = _load(project_dir)
        for vid in _vis_ids(project, vis):
            data_profile = pipeline.profile_visualization(project, vid)
            click.echo(f"{vid}:")
            click.echo(
                canonical_dumps(store.profile_payload(data_profile)).rstrip("\n")
            )
        store.save_project(project)


@main.command()
@click.argument("project_dir", type=click.Path(exists=True, path_type=Path))
@click.argument("vis", required=False)
@_guarded
def derive(project_dir: Path, vis: str | None) -> None:
    """Derive the visualization model: profile, assemble the specification,
    select the graphic type and apply default channels."""
    with store.project_lock(project_dir):
        project = _load(project_dir)
        for vid in _vis_ids(project, vis):
            entry = pipeline.derive_entry(project, vid)
            click.echo(f"{vid}: {literal(entry.graphic_type)} (rule {entry.rule_id})")
            spec = entry.spec
            rows = [
                ("goals", ", ".join(literal(g) for g in spec.goals)),
                ("interaction", ", ".join(literal(i) for i in spec.interaction)),
                ("user", literal(spec.user)),
                ("dimensionality", literal(spec.dimensionality)),
                ("cardinality", literal(spec.cardinality)),
                ("independent type",
                 "absent" if spec.independent_type is None else literal(spec.independent_type)),
                ("dependent type",
                 "absent" if spec.dependent_type is None else literal(spec.dependent_type)),
            ]
            for key, value in rows:
                click.echo(f"  {key}: {value or '(none)'}")
            click.echo(f"  model version: {entry.model_version}")


@main.command()
@click.argument("project_dir", type=click.Path(exists=True, path_type=Path))
@click.argument("vis")
@click.option("--ops", "ops_file", type=click.Path(exists=True, path_type=Path),
              required=True, help="JSON file with a list of refinement operations.")
@_guarded
def refine(project_dir: Path, vis: str, ops_file: Path) -> None:
    """Apply refinement operations to a derived model (all or none)."""
    ops = decode_ops(ops_file.read_text(encoding="utf-8"))
    with store.project_lock(project_dir):
        project = _load(project_dir)
        entry = pipeline.refine_model(project, vis, ops)
        click.echo(f"applied {len(ops)} op(s); model version {entry.model_version}")


@main.command()
@click.argument("project_dir", type=click.Path(exists=True, path_type=Path))
@click.argument("vis")
@click.option("--answers", "answers_file", type=click.Path(exists=True, path_type=Path),
              required=True,
              help="JSON file mapping goal names to yes/no answers.")
@_guarded
def validate(project_dir: Path, vis: str, answers_file: Path) -> None:
    """Answer the goal questionnaire and record the iteration."""
    raw = json.loads(answers_file.read_text(encoding="utf-8"))
    answers = pipeline.parse_answers(raw)
    with store.project_lock(project_dir):
        project = _load(project_dir)
        result, _record = pipeline.validate_and_record(project, vis, answers)
    if result.status.value == "validated":
        click.echo(f"{vis}: validated")
    else:
        failed = ", ".join(literal(g) for g in result.failed_goals)
        click.echo(f"{vis}: requires revision (failed goals: {failed})")
        raise click.exceptions.Exit(1)


@main.command()
@click.argument("project_dir", type=click.Path(exists=True, path_type=Path))
@click.argument("vis", required=False)
@_guarded
def render(project_dir: Path, vis: str | None) -> None:
    """Generate chart documents and standalone HTML under out/."""
    with store.project_lock(project_dir):
        project = _load(project_dir)
        for vid in _vis_ids(project, vis):
            for rel_path in pipeline.generate_artifacts(project, vid):
                click.echo(rel_path)


@main.command()
@click.option("--export", "export_path", type=click.Path(path_type=Path), default=None,
              help="Write the decision table to this file instead of stdout.")
@_guarded
def rules(export_path: Path | None) -> None:
    """Show the graphic-type decision table."""
    text = export_rules()
    if export_path is None:
        click.echo(text.rstrip("\n"))
    else:
        export_path.write_text(text, encoding="utf-8")
        click.echo(str(export_path))


@main.command()
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--projects", "projects_dir", type=click.Path(path_type=Path),
              default=Path("."), show_default=True,
              help="Directory that holds (and receives) project directories.")
@_guarded
def serve(port: int, host: str, projects_dir: Path) -> None:
    """Run the HTTP API for the browser refinement client."""
    import uvicorn

    from .api import create_app

    uvicorn.run(create_app(projects_dir), host=host, port=port)


# --- inspection helpers --------------------------------------------------------


@main.command()
@click.argument("project_dir", type=click.Path(exists=True, path_type=Path))
@click.argument("vis")
@_guarded
def model(project_dir: Path, vis: str) -> None:
    """Print the current visualization model JSON."""
    project = _load(project_dir)
    entry = project.entry(vis)
    if entry.model is None:
        click.echo(f"error: {vis} has no derived model", err=True)
        raise click.exceptions.Exit(1)
    click.echo(serialize_vis_model(entry.model).rstrip("\n"))
    click.echo(f"version: {model_version_token(entry.model)}", err=True)


@main.command()
@click.argument("goals_file", type=click.Path(exists=True, path_type=Path))
@_guarded
def check(goals_file: Path) -> None:
    """Parse and validate a goals file without creating a project."""
    goal_model = parse_goal_model(goals_file.read_text(encoding="utf-8"))
    pairs = goal_model.visualizations()
    click.echo(
        f"ok: actor {goal_model.actor.name!r} ({literal(goal_model.actor.kind)}), "
        f"{len(pairs)} visualization(s)"
    )
    for info_goal, requirement in pairs:
        click.echo(f"  {store.slugify(requirement.name)}: {info_goal.name}")


if __name__ == "__main__":
    main()
