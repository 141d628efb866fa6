"""goalviz: compile goal-oriented analytics requirements plus CSV data into
refined, validated chart artifacts.

The pipeline: parse the requirements DSL, profile the data, assemble the
seven-coordinate visualization specification, pick a graphic type from the
decision table, derive a visualization model with default channel
assignments, let the user refine and validate it, and generate deterministic
chart documents plus standalone HTML.
"""

__version__ = "0.1.0"

from .diagnostics import Diagnostic
from .errors import GoalVizError
from .profiling import (
    DataProfile,
    Dataset,
    ProfilerConfig,
    ScaleType,
    load_dataset,
    profile_source,
)
from .requirements import GoalModel, parse_goal_model, serialize_goal_model
from .transform import (
    VisualizationSpec,
    assemble_spec,
    build_questionnaire,
    derive_visualization,
    select_graphic_type,
    validate_visualization,
)
from .vismodel import (
    GraphicType,
    VisualizationModel,
    apply_refinement,
    check_model_invariants,
    parse_vis_model,
    serialize_vis_model,
)

__all__ = [
    "DataProfile",
    "Dataset",
    "Diagnostic",
    "GoalModel",
    "GoalVizError",
    "GraphicType",
    "ProfilerConfig",
    "ScaleType",
    "VisualizationModel",
    "VisualizationSpec",
    "__version__",
    "apply_refinement",
    "assemble_spec",
    "build_questionnaire",
    "check_model_invariants",
    "derive_visualization",
    "load_dataset",
    "parse_goal_model",
    "parse_vis_model",
    "profile_source",
    "select_graphic_type",
    "serialize_goal_model",
    "serialize_vis_model",
    "validate_visualization",
]
