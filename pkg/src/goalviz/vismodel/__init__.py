"""Visualization model: platform-independent chart structure and refinement."""

from .jsonio import (
    MODEL_SCHEMA_VERSION,
    decode_ops,
    encode_ops,
    model_payload,
    model_version_token,
    op_payload,
    parse_op,
    parse_vis_model,
    serialize_vis_model,
)
from .model import (
    CHANNEL_ORDER,
    DEFAULT_COLOR_RANGE,
    GRAPH_FAMILY,
    ORIENTATION_FREE,
    TWO_POSITIONAL,
    Attribute,
    AttributeRole,
    Axis,
    AxisVisualization,
    Channel,
    ColorRange,
    CustomColorRange,
    DashboardPosition,
    EdgeBinding,
    GraphicType,
    GraphVisualization,
    Legend,
    LegendPosition,
    LegendType,
    NamedColorRange,
    NodeBinding,
    Orientation,
    VisualizationModel,
    check_model_invariants,
)
from .refine import (
    RefinementOp,
    SetAxisBounds,
    SetChannel,
    SetColorRange,
    SetDashboardPosition,
    SetLegend,
    SetOrder,
    SetOrientation,
    SetTitle,
    apply_refinement,
    apply_refinements,
)

__all__ = [
    "MODEL_SCHEMA_VERSION",
    "CHANNEL_ORDER",
    "DEFAULT_COLOR_RANGE",
    "GRAPH_FAMILY",
    "ORIENTATION_FREE",
    "TWO_POSITIONAL",
    "Attribute",
    "AttributeRole",
    "Axis",
    "AxisVisualization",
    "Channel",
    "ColorRange",
    "CustomColorRange",
    "DashboardPosition",
    "EdgeBinding",
    "GraphicType",
    "GraphVisualization",
    "Legend",
    "LegendPosition",
    "LegendType",
    "NamedColorRange",
    "NodeBinding",
    "Orientation",
    "RefinementOp",
    "SetAxisBounds",
    "SetChannel",
    "SetColorRange",
    "SetDashboardPosition",
    "SetLegend",
    "SetOrder",
    "SetOrientation",
    "SetTitle",
    "VisualizationModel",
    "apply_refinement",
    "apply_refinements",
    "check_model_invariants",
    "decode_ops",
    "encode_ops",
    "model_payload",
    "model_version_token",
    "op_payload",
    "parse_op",
    "parse_vis_model",
    "serialize_vis_model",
]
