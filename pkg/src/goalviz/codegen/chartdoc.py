"""Model-to-text: compile a visualization model plus its data into a ChartDoc.

A ChartDoc is a neutral declarative chart description in canonical JSON;
renderers (the embedded HTML runtime, the browser preview) consume it as-is.
Byte determinism is part of the contract: equal inputs give equal bytes.
"""

from __future__ import annotations

import datetime
import logging
from typing import Any

from ..diagnostics import Diagnostic, INVARIANT
from ..errors import ModelInvalidError, UnsupportedGraphicTypeError
from ..jsonutil import canonical_dumps
from ..profiling import Dataset
from ..vismodel.jsonio import color_range_payload, legend_payload, position_payload
from ..vismodel.model import (
    CHANNEL_ORDER,
    AxisVisualization,
    GraphicType,
    VisualizationModel,
    check_model_invariants,
)

CHARTDOC_VERSION = "1.0"

SUPPORTED_CHART_TYPES = frozenset(
    {
        GraphicType.SINGLE_VALUE_CARD,
        GraphicType.COLUMN_CHART,
        GraphicType.BAR_CHART,
        GraphicType.STACKED_COLUMN_CHART,
        GraphicType.LINE_CHART,
        GraphicType.AREA_CHART,
        GraphicType.PIE_CHART,
        GraphicType.HISTOGRAM,
        GraphicType.SCATTER_PLOT,
        GraphicType.BUBBLE_CHART,
        GraphicType.HEATMAP,
        GraphicType.TABLE,
    }
)

log = logging.getLogger(__name__)


def _cell_value(value: Any) -> Any:
    if isinstance(value, datetime.date):
        return value.isoformat()
    return value


def chartdoc_payload(model: VisualizationModel, dataset: Dataset) -> dict[str, Any]:
    """The ChartDoc as JSON-ready data; ``generate_chartdoc`` fixes the bytes."""
    if model.graphic_type not in SUPPORTED_CHART_TYPES:
        raise UnsupportedGraphicTypeError(
            f"no chart document for graphic type {model.graphic_type.value}"
        )
    problems = check_model_invariants(model)
    if problems:
        raise ModelInvalidError(problems)
    body = model.body
    assert isinstance(body, AxisVisualization)  # supported types are axis-based

    encodings: dict[str, Any] = {}
    encoded_names: list[str] = []
    for channel in CHANNEL_ORDER:
        axis = body.axis_on(channel)
        if axis is None:
            continue
        attribute = axis.attribute
        if attribute is not None:
            if attribute.name not in dataset.column_names:
                raise ModelInvalidError(
                    [
                        Diagnostic(
                            code=INVARIANT,
                            message=(
                                f"axis attribute {attribute.name!r} is not a column "
                                "of the dataset"
                            ),
                        )
                    ]
                )
            encoded_names.append(attribute.name)
        encodings[channel.value] = {
            "attribute": None if attribute is None else attribute.name,
            "scale_type": None if attribute is None else attribute.type.value,
            "min": axis.min_value,
            "max": axis.max_value,
            "order_role": axis.order_role,
        }

    data: list[dict[str, Any]] = []
    dropped = 0
    for row in dataset.rows():
        values = {name: row[name] for name in encoded_names}
        if any(v is None for v in values.values()):
            dropped += 1
            continue
        data.append({name: _cell_value(v) for name, v in values.items()})
    if dropped:
        log.info(
            "chartdoc %r: dropped %d row(s) with nulls in encoded attributes",
            model.title,
            dropped,
        )

    return {
        "version": CHARTDOC_VERSION,
        "title": model.title,
        "graphic_type": model.graphic_type.value,
        "orientation": model.orientation.value,
        "interactions": [i.value for i in model.interactions],
        "legend": legend_payload(model.legend),
        "color_range": color_range_payload(model.color_range),
        "encodings": encodings,
        "data": data,
        "dashboard_position": position_payload(model.dashboard_position),
    }


def generate_chartdoc(model: VisualizationModel, dataset: Dataset) -> str:
    """Canonical ChartDoc text; "<" is escaped so the bytes can be embedded
    in an HTML script element verbatim."""
    return canonical_dumps(chartdoc_payload(model, dataset), escape_lt=True)
