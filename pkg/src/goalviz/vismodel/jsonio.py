"""Canonical JSON round-trip for visualization models and refinement ops.

The byte layout is fixed (field order, 2-space indent, LF) so that equal
models always serialize to equal bytes; the version token is a digest of
those bytes and is what optimistic-concurrency checks compare.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from ..errors import SchemaError
from ..jsonutil import canonical_dumps
from ..profiling import ScaleType
from ..requirements.model import Interaction
from .model import (
    Attribute,
    AttributeRole,
    Axis,
    AxisVisualization,
    Channel,
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
)

MODEL_SCHEMA_VERSION = "1.0"


def legend_payload(legend: Legend | None) -> dict[str, Any] | None:
    if legend is None:
        return None
    return {
        "title": legend.title,
        "type": legend.type.value,
        "position": legend.position.value,
        "font_family": legend.font_family,
        "text_size": legend.text_size,
    }


def color_range_payload(color_range) -> dict[str, Any]:
    if isinstance(color_range, NamedColorRange):
        return {"kind": "named", "palette": color_range.palette}
    return {"kind": "custom", "colors": list(color_range.colors)}


def position_payload(position: DashboardPosition | None) -> dict[str, Any] | None:
    if position is None:
        return None
    return {
        "row": position.row,
        "col": position.col,
        "width": position.width,
        "height": position.height,
    }


def _attribute_payload(attribute: Attribute | None) -> dict[str, Any] | None:
    if attribute is None:
        return None
    return {
        "name": attribute.name,
        "type": attribute.type.value,
        "role": attribute.role.value,
    }


def _axis_payload(axis: Axis) -> dict[str, Any]:
    return {
        "name": axis.name,
        "channel": axis.channel.value,
        "attribute": _attribute_payload(axis.attribute),
        "order_role": axis.order_role,
        "min": axis.min_value,
        "max": axis.max_value,
    }


def _body_payload(body) -> dict[str, Any]:
    if isinstance(body, AxisVisualization):
        return {"kind": "axis", "axes": [_axis_payload(a) for a in body.axes]}
    nodes = None
    if body.nodes is not None:
        nodes = {
            "id_column": body.nodes.id_column,
            "label_column": body.nodes.label_column,
        }
    return {
        "kind": "graph",
        "nodes": nodes,
        "edges": {
            "source_column": body.edges.source_column,
            "target_column": body.edges.target_column,
        },
    }


def model_payload(model: VisualizationModel) -> dict[str, Any]:
    """The model as plain JSON-ready data, in canonical field order."""
    return {
        "schema": MODEL_SCHEMA_VERSION,
        "title": model.title,
        "legend": legend_payload(model.legend),
        "graphic_type": model.graphic_type.value,
        "interactions": [i.value for i in model.interactions],
        "dashboard_position": position_payload(model.dashboard_position),
        "orientation": model.orientation.value,
        "color_range": color_range_payload(model.color_range),
        "body": _body_payload(model.body),
    }


def serialize_vis_model(model: VisualizationModel) -> str:
    return canonical_dumps(model_payload(model))


def model_version_token(model: VisualizationModel) -> str:
    digest = hashlib.sha256(serialize_vis_model(model).encode("utf-8"))
    return digest.hexdigest()[:16]


# --- parsing ---------------------------------------------------------------


def _fail(path: str, message: str) -> SchemaError:
    return SchemaError(f"{path}: {message}")


def _get(obj: dict[str, Any], key: str, path: str) -> Any:
    if key not in obj:
        raise _fail(path, f"missing field {key!r}")
    return obj[key]


def _str(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise _fail(path, "expected a string")
    return value


def _bool(value: Any, path: str) -> bool:
    if not isinstance(value, bool):
        raise _fail(path, "expected a boolean")
    return value


def _int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _fail(path, "expected an integer")
    return value


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _fail(path, "expected a number")
    return float(value)


def _number_or_null(value: Any, path: str) -> float | None:
    if value is None:
        return None
    return _number(value, path)


def _dict(value: Any, path: str) -> dict[str, Any]:
    if not isinstance(value, dict):
        raise _fail(path, "expected an object")
    return value


def _list(value: Any, path: str) -> list[Any]:
    if not isinstance(value, list):
        raise _fail(path, "expected an array")
    return value


def _enum(enum_cls, value: Any, path: str):
    text = _str(value, path)
    try:
        return enum_cls(text)
    except ValueError:
        allowed = ", ".join(m.value for m in enum_cls)
        raise _fail(path, f"unknown value {text!r}; expected one of: {allowed}") from None


def _parse_legend(value: Any, path: str) -> Legend | None:
    if value is None:
        return None
    obj = _dict(value, path)
    return Legend(
        title=_str(_get(obj, "title", path), f"{path}.title"),
        type=_enum(LegendType, _get(obj, "type", path), f"{path}.type"),
        position=_enum(LegendPosition, _get(obj, "position", path), f"{path}.position"),
        font_family=_str(_get(obj, "font_family", path), f"{path}.font_family"),
        text_size=_number(_get(obj, "text_size", path), f"{path}.text_size"),
    )


def _parse_color_range(value: Any, path: str):
    obj = _dict(value, path)
    kind = _str(_get(obj, "kind", path), f"{path}.kind")
    if kind == "named":
        return NamedColorRange(palette=_str(_get(obj, "palette", path), f"{path}.palette"))
    if kind == "custom":
        colors = _list(_get(obj, "colors", path), f"{path}.colors")
        return CustomColorRange(
            colors=tuple(_str(c, f"{path}.colors[{i}]") for i, c in enumerate(colors))
        )
    raise _fail(f"{path}.kind", f"unknown color range kind {kind!r}")


def _parse_position(value: Any, path: str) -> DashboardPosition | None:
    if value is None:
        return None
    obj = _dict(value, path)
    return DashboardPosition(
        row=_int(_get(obj, "row", path), f"{path}.row"),
        col=_int(_get(obj, "col", path), f"{path}.col"),
        width=_int(_get(obj, "width", path), f"{path}.width"),
        height=_int(_get(obj, "height", path), f"{path}.height"),
    )


def _parse_attribute(value: Any, path: str) -> Attribute | None:
    if value is None:
        return None
    obj = _dict(value, path)
    return Attribute(
        name=_str(_get(obj, "name", path), f"{path}.name"),
        type=_enum(ScaleType, _get(obj, "type", path), f"{path}.type"),
        role=_enum(AttributeRole, _get(obj, "role", path), f"{path}.role"),
    )


def _parse_axis(value: Any, path: str) -> Axis:
    obj = _dict(value, path)
    return Axis(
        name=_str(_get(obj, "name", path), f"{path}.name"),
        channel=_enum(Channel, _get(obj, "channel", path), f"{path}.channel"),
        attribute=_parse_attribute(_get(obj, "attribute", path), f"{path}.attribute"),
        order_role=_bool(_get(obj, "order_role", path), f"{path}.order_role"),
        min_value=_number_or_null(_get(obj, "min", path), f"{path}.min"),
        max_value=_number_or_null(_get(obj, "max", path), f"{path}.max"),
    )


def _parse_body(value: Any, path: str):
    obj = _dict(value, path)
    kind = _str(_get(obj, "kind", path), f"{path}.kind")
    if kind == "axis":
        axes = _list(_get(obj, "axes", path), f"{path}.axes")
        return AxisVisualization(
            axes=tuple(_parse_axis(a, f"{path}.axes[{i}]") for i, a in enumerate(axes))
        )
    if kind == "graph":
        nodes_value = _get(obj, "nodes", path)
        nodes = None
        if nodes_value is not None:
            nodes_obj = _dict(nodes_value, f"{path}.nodes")
            nodes = NodeBinding(
                id_column=_str(_get(nodes_obj, "id_column", path), f"{path}.nodes.id_column"),
                label_column=_str(
                    _get(nodes_obj, "label_column", path), f"{path}.nodes.label_column"
                ),
            )
        edges_obj = _dict(_get(obj, "edges", path), f"{path}.edges")
        return GraphVisualization(
            nodes=nodes,
            edges=EdgeBinding(
                source_column=_str(
                    _get(edges_obj, "source_column", path), f"{path}.edges.source_column"
                ),
                target_column=_str(
                    _get(edges_obj, "target_column", path), f"{path}.edges.target_column"
                ),
            ),
        )
    raise _fail(f"{path}.kind", f"unknown body kind {kind!r}")


def parse_vis_model(text: str) -> VisualizationModel:
    """Parse canonical (or hand-edited) model JSON; raises SchemaError."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    obj = _dict(raw, "$")
    interactions = _list(_get(obj, "interactions", "$"), "$.interactions")
    return VisualizationModel(
        title=_str(_get(obj, "title", "$"), "$.title"),
        legend=_parse_legend(_get(obj, "legend", "$"), "$.legend"),
        graphic_type=_enum(GraphicType, _get(obj, "graphic_type", "$"), "$.graphic_type"),
        interactions=tuple(
            _enum(Interaction, i, f"$.interactions[{n}]") for n, i in enumerate(interactions)
        ),
        dashboard_position=_parse_position(
            _get(obj, "dashboard_position", "$"), "$.dashboard_position"
        ),
        orientation=_enum(Orientation, _get(obj, "orientation", "$"), "$.orientation"),
        color_range=_parse_color_range(_get(obj, "color_range", "$"), "$.color_range"),
        body=_parse_body(_get(obj, "body", "$"), "$.body"),
    )


# --- refinement ops --------------------------------------------------------


def op_payload(op: RefinementOp) -> dict[str, Any]:
    if isinstance(op, SetChannel):
        return {
            "op": "set_channel",
            "attribute": op.attribute,
            "channel": op.channel.value,
            "swap": op.swap,
        }
    if isinstance(op, SetOrder):
        return {"op": "set_order", "attribute": op.attribute}
    if isinstance(op, SetOrientation):
        return {"op": "set_orientation", "orientation": op.orientation.value}
    if isinstance(op, SetLegend):
        return {"op": "set_legend", "legend": legend_payload(op.legend)}
    if isinstance(op, SetColorRange):
        return {"op": "set_color_range", "color_range": color_range_payload(op.color_range)}
    if isinstance(op, SetAxisBounds):
        return {
            "op": "set_axis_bounds",
            "channel": op.channel.value,
            "min": op.min_value,
            "max": op.max_value,
        }
    if isinstance(op, SetTitle):
        return {"op": "set_title", "title": op.title}
    if isinstance(op, SetDashboardPosition):
        return {"op": "set_dashboard_position", "position": position_payload(op.position)}
    raise TypeError(f"unknown refinement op {op!r}")


def encode_ops(ops) -> str:
    return canonical_dumps([op_payload(op) for op in ops])


def parse_op(value: Any, path: str = "$") -> RefinementOp:
    obj = _dict(value, path)
    kind = _str(_get(obj, "op", path), f"{path}.op")
    if kind == "set_channel":
        swap = True
        if "swap" in obj:
            swap = _bool(obj["swap"], f"{path}.swap")
        return SetChannel(
            attribute=_str(_get(obj, "attribute", path), f"{path}.attribute"),
            channel=_enum(Channel, _get(obj, "channel", path), f"{path}.channel"),
            swap=swap,
        )
    if kind == "set_order":
        return SetOrder(attribute=_str(_get(obj, "attribute", path), f"{path}.attribute"))
    if kind == "set_orientation":
        return SetOrientation(
            orientation=_enum(
                Orientation, _get(obj, "orientation", path), f"{path}.orientation"
            )
        )
    if kind == "set_legend":
        return SetLegend(legend=_parse_legend(_get(obj, "legend", path), f"{path}.legend"))
    if kind == "set_color_range":
        return SetColorRange(
            color_range=_parse_color_range(
                _get(obj, "color_range", path), f"{path}.color_range"
            )
        )
    if kind == "set_axis_bounds":
        return SetAxisBounds(
            channel=_enum(Channel, _get(obj, "channel", path), f"{path}.channel"),
            min_value=_number_or_null(_get(obj, "min", path), f"{path}.min"),
            max_value=_number_or_null(_get(obj, "max", path), f"{path}.max"),
        )
    if kind == "set_title":
        return SetTitle(title=_str(_get(obj, "title", path), f"{path}.title"))
    if kind == "set_dashboard_position":
        return SetDashboardPosition(
            position=_parse_position(_get(obj, "position", path), f"{path}.position")
        )
    raise _fail(f"{path}.op", f"unknown refinement op {kind!r}")


def decode_ops(text: str) -> list[RefinementOp]:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    items = _list(raw, "$")
    return [parse_op(item, f"$[{i}]") for i, item in enumerate(items)]
