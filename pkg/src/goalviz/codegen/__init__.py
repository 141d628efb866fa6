"""Model-to-text transformation: ChartDoc, GraphDoc and standalone HTML."""

from .chartdoc import (
    CHARTDOC_VERSION,
    SUPPORTED_CHART_TYPES,
    chartdoc_payload,
    generate_chartdoc,
)
from .graphdoc import generate_graphdoc, graphdoc_payload
from .html import extract_chartdoc, generate_html, interaction_flags

__all__ = [
    "CHARTDOC_VERSION",
    "SUPPORTED_CHART_TYPES",
    "chartdoc_payload",
    "extract_chartdoc",
    "generate_chartdoc",
    "generate_graphdoc",
    "generate_html",
    "graphdoc_payload",
    "interaction_flags",
]
