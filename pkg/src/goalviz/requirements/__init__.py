"""Goal-oriented requirements model: the DSL, its parser, and validators."""

from .model import (
    FLAT,
    ActorKind,
    AnalysisKind,
    AnalysisType,
    BusinessProcess,
    DatasourceResource,
    DecisionGoal,
    FlatShape,
    GoalModel,
    GraphShape,
    InformationGoal,
    Interaction,
    SourceShape,
    StrategicGoal,
    TreeShape,
    VisGoal,
    VisualizationActor,
    VisualizationRequirement,
    literal,
    match_literal,
    validate_goal_model,
)
from .parser import parse_goal_model
from .writer import serialize_goal_model

__all__ = [
    "FLAT",
    "ActorKind",
    "AnalysisKind",
    "AnalysisType",
    "BusinessProcess",
    "DatasourceResource",
    "DecisionGoal",
    "FlatShape",
    "GoalModel",
    "GraphShape",
    "InformationGoal",
    "Interaction",
    "SourceShape",
    "StrategicGoal",
    "TreeShape",
    "VisGoal",
    "VisualizationActor",
    "VisualizationRequirement",
    "literal",
    "match_literal",
    "parse_goal_model",
    "serialize_goal_model",
    "validate_goal_model",
]
