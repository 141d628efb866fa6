"""Goal-oriented requirements model: actors, processes, goal hierarchy, sources."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..diagnostics import (
    DUPLICATE_ATTRIBUTE,
    EMPTY_MULTIPLICITY,
    INVARIANT,
    MISSING_BUSINESS_PROCESS,
    Diagnostic,
)


class ActorKind(enum.Enum):
    LAY = "lay"
    TECH = "tech"


class AnalysisKind(enum.Enum):
    PRESCRIPTIVE = "prescriptive"
    DIAGNOSTIC = "diagnostic"
    PREDICTIVE = "predictive"
    DESCRIPTIVE = "descriptive"


class VisGoal(enum.Enum):
    COMPOSITION = "composition"
    ORDER = "order"
    RELATIONSHIP = "relationship"
    COMPARISON = "comparison"
    CLUSTER = "cluster"
    DISTRIBUTION = "distribution"
    TREND = "trend"
    GEOSPATIAL = "geospatial"


class Interaction(enum.Enum):
    OVERVIEW = "overview"
    ZOOM = "zoom"
    FILTER = "filter"
    DETAILS_ON_DEMAND = "details_on_demand"


def literal(member: enum.Enum) -> str:
    """Canonical surface spelling of an enum member (``DetailsOnDemand``)."""
    return "".join(part.capitalize() for part in member.value.split("_"))


def _normalize(text: str) -> str:
    return text.casefold().replace("-", "").replace("_", "")


def match_literal(enum_cls: type[enum.Enum], text: str) -> enum.Enum | None:
    """Case-insensitive literal lookup; hyphens/underscores are ignored."""
    wanted = _normalize(text)
    for member in enum_cls:
        if _normalize(literal(member)) == wanted:
            return member
    return None


# -- data source shape declarations -----------------------------------------

@dataclass(frozen=True)
class FlatShape:
    pass


@dataclass(frozen=True)
class TreeShape:
    parent_column: str
    id_column: str


@dataclass(frozen=True)
class GraphShape:
    source_column: str
    target_column: str


SourceShape = FlatShape | TreeShape | GraphShape

FLAT = FlatShape()


@dataclass(frozen=True)
class DatasourceResource:
    """A dataset selection: which file, which columns, how rows relate.

    ``type_overrides`` maps attribute name to a scale-type value string
    (``"nominal"``/``"ordinal"``/``"interval"``/``"ratio"``); the profiler
    resolves it against its own ScaleType enum.
    """

    uri: str
    categories: tuple[str, ...] = ()
    measures: tuple[str, ...] = ()
    shape: SourceShape = FLAT
    type_overrides: dict[str, str] = field(default_factory=dict)

    @property
    def attributes(self) -> tuple[str, ...]:
        return self.categories + self.measures


@dataclass(frozen=True)
class VisualizationRequirement:
    name: str
    goals: tuple[VisGoal, ...]
    interactions: tuple[Interaction, ...]
    sources: tuple[DatasourceResource, ...]


@dataclass(frozen=True)
class InformationGoal:
    name: str
    visualization: VisualizationRequirement | None


@dataclass(frozen=True)
class DecisionGoal:
    name: str
    information_goals: tuple[InformationGoal, ...]


@dataclass(frozen=True)
class AnalysisType:
    kind: AnalysisKind
    decision_goals: tuple[DecisionGoal, ...]


@dataclass(frozen=True)
class StrategicGoal:
    name: str
    analyses: tuple[AnalysisType, ...]


@dataclass(frozen=True)
class VisualizationActor:
    name: str
    kind: ActorKind


@dataclass(frozen=True)
class BusinessProcess:
    name: str


@dataclass(frozen=True)
class GoalModel:
    actor: VisualizationActor
    process: BusinessProcess
    strategic_goals: tuple[StrategicGoal, ...] = ()

    def visualizations(self) -> list[tuple[InformationGoal, VisualizationRequirement]]:
        """All (information goal, visualization) pairs in document order."""
        out = []
        for sg in self.strategic_goals:
            for an in sg.analyses:
                for dg in an.decision_goals:
                    for ig in dg.information_goals:
                        if ig.visualization is not None:
                            out.append((ig, ig.visualization))
        return out


def validate_goal_model(model: GoalModel) -> list[Diagnostic]:
    """Check every model invariant; empty list means the model is valid."""
    diags: list[Diagnostic] = []

    def report(code: str, path: str, message: str) -> None:
        diags.append(Diagnostic(code=code, message=message, path=path))

    if not model.process.name:
        report(MISSING_BUSINESS_PROCESS, "process", "business process name is empty")

    # The goal hierarchy must be a tree: no node object may appear twice.
    seen: set[int] = set()

    def enter(node: object, path: str) -> bool:
        if id(node) in seen:
            report(INVARIANT, path, "node appears more than once in the goal hierarchy")
            return False
        seen.add(id(node))
        return True

    for si, sg in enumerate(model.strategic_goals):
        spath = f"strategic[{si}]"
        if not enter(sg, spath):
            continue
        if not sg.analyses:
            report(EMPTY_MULTIPLICITY, spath, "strategic goal has no analyses")
        for ai, an in enumerate(sg.analyses):
            apath = f"{spath}.analyses[{ai}]"
            if not enter(an, apath):
                continue
            if not an.decision_goals:
                report(EMPTY_MULTIPLICITY, apath, "analysis has no decision goals")
            for di, dg in enumerate(an.decision_goals):
                dpath = f"{apath}.decision_goals[{di}]"
                if not enter(dg, dpath):
                    continue
                if not dg.information_goals:
                    report(EMPTY_MULTIPLICITY, dpath, "decision goal has no information goals")
                for ii, ig in enumerate(dg.information_goals):
                    ipath = f"{dpath}.information_goals[{ii}]"
                    if not enter(ig, ipath):
                        continue
                    if ig.visualization is None:
                        report(
                            EMPTY_MULTIPLICITY,
                            ipath,
                            "information goal has no visualization",
                        )
                        continue
                    _validate_requirement(ig.visualization, f"{ipath}.visualization", report, enter)
    return diags


def _validate_requirement(req: VisualizationRequirement, path: str, report, enter) -> None:
    if not enter(req, path):
        return
    if not req.goals:
        report(EMPTY_MULTIPLICITY, f"{path}.goals", "visualization has no goals")
    if not req.interactions:
        report(EMPTY_MULTIPLICITY, f"{path}.interactions", "visualization has no interactions")
    if not req.sources:
        report(EMPTY_MULTIPLICITY, f"{path}.sources", "visualization has no sources")
    if len(set(req.goals)) != len(req.goals):
        report(INVARIANT, f"{path}.goals", "duplicate visualization goal")
    if len(set(req.interactions)) != len(req.interactions):
        report(INVARIANT, f"{path}.interactions", "duplicate interaction")
    for qi, src in enumerate(req.sources):
        spath = f"{path}.sources[{qi}]"
        if not src.categories and not src.measures:
            report(EMPTY_MULTIPLICITY, spath, "source selects no categories or measures")
        overlap = set(src.categories) & set(src.measures)
        for name in sorted(overlap):
            report(
                DUPLICATE_ATTRIBUTE,
                spath,
                f"attribute {name!r} is declared as both category and measure",
            )
        for coll, kind in ((src.categories, "category"), (src.measures, "measure")):
            seen_names: set[str] = set()
            for name in coll:
                if name in seen_names:
                    report(DUPLICATE_ATTRIBUTE, spath, f"duplicate {kind} {name!r}")
                seen_names.add(name)
