"""Model-to-model transformation: spec + requirement -> visualization model.

Axis channels are assigned by a fixed, deterministic default (the user is
expected to refine them): first category to X, first measure to Y, remaining
categories to Color then Detail, remaining measures to Size then Detail.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Mapping, Sequence

from ..errors import TooManyAttributesError
from ..profiling import ScaleType
from ..requirements.model import GraphShape, TreeShape, VisualizationRequirement
from ..vismodel.model import (
    DEFAULT_COLOR_RANGE,
    GRAPH_FAMILY,
    ORIENTATION_FREE,
    Attribute,
    AttributeRole,
    Axis,
    AxisVisualization,
    Channel,
    EdgeBinding,
    GraphicType,
    GraphVisualization,
    Legend,
    NodeBinding,
    Orientation,
    VisualizationModel,
)
from .spec import VisualizationSpec

_CATEGORY_CHANNELS = (Channel.X, Channel.COLOR, Channel.DETAIL)
_MEASURE_CHANNELS = (Channel.Y, Channel.SIZE, Channel.DETAIL)


def derive_axes(
    categories: Sequence[Attribute],
    measures: Sequence[Attribute],
    graphic: GraphicType,
) -> list[Axis]:
    """One axis per attribute, channels assigned in declaration order."""
    if graphic in GRAPH_FAMILY:
        raise ValueError(f"{graphic.value} is not an axis-based graphic")
    taken: set[Channel] = set()
    axes: list[Axis] = []

    def place(attribute: Attribute, preference: tuple[Channel, ...]) -> None:
        for channel in preference:
            if channel not in taken:
                taken.add(channel)
                axes.append(
                    Axis(name=attribute.name, channel=channel, attribute=attribute)
                )
                return
        raise TooManyAttributesError(
            f"no free channel left for attribute {attribute.name!r}"
        )

    for i, category in enumerate(categories):
        place(category, _CATEGORY_CHANNELS[:1] if i == 0 else _CATEGORY_CHANNELS[1:])
    for i, measure in enumerate(measures):
        place(measure, _MEASURE_CHANNELS[:1] if i == 0 else _MEASURE_CHANNELS[1:])

    # The X-channel attribute orders the data unless the user says otherwise.
    return [
        dataclasses.replace(axis, order_role=True) if axis.channel == Channel.X else axis
        for axis in axes
    ]


def _attributes(
    requirement: VisualizationRequirement,
    spec: VisualizationSpec,
    attribute_types: Mapping[str, ScaleType] | None,
) -> tuple[list[Attribute], list[Attribute]]:
    source = requirement.sources[0]

    def typed(name: str, role: AttributeRole, fallback: ScaleType | None) -> Attribute:
        if attribute_types is not None and name in attribute_types:
            scale = attribute_types[name]
        elif fallback is not None:
            scale = fallback
        else:
            scale = ScaleType.NOMINAL if role is AttributeRole.CATEGORY else ScaleType.RATIO
        return Attribute(name=name, type=scale, role=role)

    categories = [
        typed(name, AttributeRole.CATEGORY, spec.independent_type)
        for name in source.categories
    ]
    measures = [
        typed(name, AttributeRole.MEASURE, spec.dependent_type)
        for name in source.measures
    ]
    return categories, measures


def derive_visualization(
    spec: VisualizationSpec,
    requirement: VisualizationRequirement,
    graphic: GraphicType,
    attribute_types: Mapping[str, ScaleType] | None = None,
) -> VisualizationModel:
    """Derive the default model. ``attribute_types`` carries the profiled
    per-column scale types; without it every category falls back to the
    spec's independent type and every measure to its dependent type."""
    source = requirement.sources[0]
    if isinstance(source.shape, TreeShape):
        body: AxisVisualization | GraphVisualization = GraphVisualization(
            nodes=NodeBinding(id_column=source.shape.id_column, label_column=source.shape.id_column),
            edges=EdgeBinding(
                source_column=source.shape.parent_column,
                target_column=source.shape.id_column,
            ),
        )
    elif isinstance(source.shape, GraphShape):
        body = GraphVisualization(
            nodes=None,
            edges=EdgeBinding(
                source_column=source.shape.source_column,
                target_column=source.shape.target_column,
            ),
        )
    elif graphic in GRAPH_FAMILY:
        raise ValueError(
            f"{graphic.value} needs a tree or graph shaped source; "
            f"{source.uri!r} is flat"
        )
    else:
        categories, measures = _attributes(requirement, spec, attribute_types)
        body = AxisVisualization(axes=tuple(derive_axes(categories, measures, graphic)))

    legend = None
    if isinstance(body, AxisVisualization):
        color_axis = body.axis_on(Channel.COLOR)
        if color_axis is not None and color_axis.attribute is not None:
            legend = Legend(title=color_axis.attribute.name)

    orientation = Orientation.ANY if graphic in ORIENTATION_FREE else Orientation.VERTICAL
    return VisualizationModel(
        title=requirement.name,
        legend=legend,
        graphic_type=graphic,
        interactions=requirement.interactions,
        dashboard_position=None,
        orientation=orientation,
        color_range=DEFAULT_COLOR_RANGE,
        body=body,
    )
