"""Platform-independent visualization model: the artifact users refine."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from ..diagnostics import INVARIANT, Diagnostic
from ..profiling import ScaleType
from ..requirements.model import Interaction


class GraphicType(enum.Enum):
    SINGLE_VALUE_CARD = "single_value_card"
    COLUMN_CHART = "column_chart"
    BAR_CHART = "bar_chart"
    STACKED_COLUMN_CHART = "stacked_column_chart"
    LINE_CHART = "line_chart"
    AREA_CHART = "area_chart"
    PIE_CHART = "pie_chart"
    HISTOGRAM = "histogram"
    SCATTER_PLOT = "scatter_plot"
    BUBBLE_CHART = "bubble_chart"
    HEATMAP = "heatmap"
    TREEMAP = "treemap"
    NODE_LINK_GRAPH = "node_link_graph"
    CHOROPLETH_MAP = "choropleth_map"
    TABLE = "table"


# Graphics rendered from nodes and edges rather than axes.
GRAPH_FAMILY = frozenset({GraphicType.TREEMAP, GraphicType.NODE_LINK_GRAPH})

# Graphics with no horizontal/vertical reading; their orientation is Any.
ORIENTATION_FREE = frozenset({
    GraphicType.PIE_CHART,
    GraphicType.SCATTER_PLOT,
    GraphicType.BUBBLE_CHART,
    GraphicType.HEATMAP,
    GraphicType.TREEMAP,
    GraphicType.NODE_LINK_GRAPH,
    GraphicType.CHOROPLETH_MAP,
    GraphicType.SINGLE_VALUE_CARD,
    GraphicType.TABLE,
})

# Graphics whose axis layout needs both positional channels bound.
TWO_POSITIONAL = frozenset({
    GraphicType.COLUMN_CHART,
    GraphicType.BAR_CHART,
    GraphicType.STACKED_COLUMN_CHART,
    GraphicType.LINE_CHART,
    GraphicType.AREA_CHART,
    GraphicType.SCATTER_PLOT,
    GraphicType.BUBBLE_CHART,
    GraphicType.HEATMAP,
})


class Channel(enum.Enum):
    X = "x"
    Y = "y"
    COLOR = "color"
    SIZE = "size"
    DETAIL = "detail"


CHANNEL_ORDER = (Channel.X, Channel.Y, Channel.COLOR, Channel.SIZE, Channel.DETAIL)


class Orientation(enum.Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    ANY = "any"


class LegendType(enum.Enum):
    LIST = "list"
    SWATCH = "swatch"


class LegendPosition(enum.Enum):
    TOP = "top"
    BOTTOM = "bottom"
    LEFT = "left"
    RIGHT = "right"


class AttributeRole(enum.Enum):
    CATEGORY = "category"
    MEASURE = "measure"


@dataclass(frozen=True)
class Legend:
    title: str
    type: LegendType = LegendType.LIST
    position: LegendPosition = LegendPosition.RIGHT
    font_family: str = "sans-serif"
    text_size: float = 12


@dataclass(frozen=True)
class NamedColorRange:
    palette: str


@dataclass(frozen=True)
class CustomColorRange:
    colors: tuple[str, ...]


ColorRange = NamedColorRange | CustomColorRange

DEFAULT_COLOR_RANGE = NamedColorRange("colorblind-safe-8")

_HEX_COLOR = re.compile(r"#[0-9a-fA-F]{6}")


@dataclass(frozen=True)
class DashboardPosition:
    row: int
    col: int
    width: int = 1
    height: int = 1


@dataclass(frozen=True)
class Attribute:
    name: str
    type: ScaleType
    role: AttributeRole


@dataclass(frozen=True)
class Axis:
    """One encoding channel; ``attribute`` is None for synthetic count axes."""

    name: str
    channel: Channel
    attribute: Attribute | None
    order_role: bool = False
    min_value: float | None = None
    max_value: float | None = None


@dataclass(frozen=True)
class AxisVisualization:
    axes: tuple[Axis, ...]

    def axis_on(self, channel: Channel) -> Axis | None:
        for axis in self.axes:
            if axis.channel == channel:
                return axis
        return None

    def axis_for(self, attribute_name: str) -> Axis | None:
        for axis in self.axes:
            if axis.attribute is not None and axis.attribute.name == attribute_name:
                return axis
        return None


@dataclass(frozen=True)
class NodeBinding:
    id_column: str
    label_column: str


@dataclass(frozen=True)
class EdgeBinding:
    source_column: str
    target_column: str


@dataclass(frozen=True)
class GraphVisualization:
    nodes: NodeBinding | None
    edges: EdgeBinding


@dataclass(frozen=True)
class VisualizationModel:
    title: str
    legend: Legend | None
    graphic_type: GraphicType
    interactions: tuple[Interaction, ...]
    dashboard_position: DashboardPosition | None
    orientation: Orientation
    color_range: ColorRange
    body: AxisVisualization | GraphVisualization


def check_model_invariants(model: VisualizationModel) -> list[Diagnostic]:
    """Report every invariant violation; an empty list means the model is valid."""
    diags: list[Diagnostic] = []

    def report(path: str, message: str) -> None:
        diags.append(Diagnostic(code=INVARIANT, message=message, path=path))

    gt = model.graphic_type
    if gt in ORIENTATION_FREE and model.orientation != Orientation.ANY:
        report("orientation", f"{gt.value} has no orientation; it must be Any")
    if gt not in ORIENTATION_FREE and model.orientation == Orientation.ANY:
        report("orientation", f"{gt.value} is oriented; orientation must be Horizontal or Vertical")

    if gt in GRAPH_FAMILY and not isinstance(model.body, GraphVisualization):
        report("body", f"{gt.value} requires a graph visualization body")
    if gt not in GRAPH_FAMILY and not isinstance(model.body, AxisVisualization):
        report("body", f"{gt.value} requires an axis visualization body")

    if model.legend is not None and model.legend.text_size <= 0:
        report("legend.text_size", "legend text size must be positive")

    cr = model.color_range
    if isinstance(cr, CustomColorRange):
        if not cr.colors:
            report("color_range", "custom color range is empty")
        for color in cr.colors:
            if not _HEX_COLOR.fullmatch(color):
                report("color_range", f"malformed hex color {color!r}")

    pos = model.dashboard_position
    if pos is not None:
        if pos.row < 0 or pos.col < 0:
            report("dashboard_position", "row and col must be >= 0")
        if pos.width < 1 or pos.height < 1:
            report("dashboard_position", "width and height must be >= 1")

    if isinstance(model.body, AxisVisualization):
        _check_axes(model, model.body, report)
    return diags


def _check_axes(model: VisualizationModel, body: AxisVisualization, report) -> None:
    by_channel: dict[Channel, int] = {}
    attr_names: list[str] = []
    order_flags = 0
    for i, axis in enumerate(body.axes):
        path = f"axes[{i}]"
        by_channel[axis.channel] = by_channel.get(axis.channel, 0) + 1
        if axis.attribute is not None:
            if axis.attribute.name in attr_names:
                report(path, f"attribute {axis.attribute.name!r} is bound to more than one axis")
            attr_names.append(axis.attribute.name)
        if axis.order_role:
            order_flags += 1
        if (
            axis.min_value is not None
            and axis.max_value is not None
            and axis.min_value >= axis.max_value
        ):
            report(path, "axis minimum must be below its maximum")
    for channel, count in by_channel.items():
        if count > 1:
            report("axes", f"channel {channel.value} is assigned {count} times")
    if order_flags > 1:
        report("axes", "more than one axis carries the order role")
    if model.graphic_type in TWO_POSITIONAL:
        for channel in (Channel.X, Channel.Y):
            if by_channel.get(channel, 0) != 1:
                report(
                    "axes",
                    f"{model.graphic_type.value} needs channel {channel.value} assigned exactly once",
                )
