"""User refinement operations over visualization models.

Every operation is a small immutable command; ``apply_refinement`` returns a
new model and guarantees closure: a valid input model either yields a valid
output model or a typed error, never an invalid model.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from ..errors import (
    ChannelOccupiedError,
    DuplicateAssignmentError,
    InvalidBoundsError,
    OrientationNotApplicableError,
    RefinementRejectedError,
    UnknownAxisError,
    UnknownModelAttributeError,
)
from .model import (
    ORIENTATION_FREE,
    AxisVisualization,
    Channel,
    ColorRange,
    DashboardPosition,
    Legend,
    Orientation,
    VisualizationModel,
    check_model_invariants,
)


@dataclass(frozen=True)
class SetChannel:
    """Move an attribute's axis to a channel.

    With ``swap`` (the default), an axis already occupying the target channel
    takes over the vacated one. Without it the op is a strict assignment and
    fails if the attribute sits elsewhere or the channel is taken.
    """

    attribute: str
    channel: Channel
    swap: bool = True


@dataclass(frozen=True)
class SetOrder:
    attribute: str


@dataclass(frozen=True)
class SetOrientation:
    orientation: Orientation


@dataclass(frozen=True)
class SetLegend:
    legend: Legend | None


@dataclass(frozen=True)
class SetColorRange:
    color_range: ColorRange


@dataclass(frozen=True)
class SetAxisBounds:
    channel: Channel
    min_value: float | None
    max_value: float | None


@dataclass(frozen=True)
class SetTitle:
    title: str


@dataclass(frozen=True)
class SetDashboardPosition:
    position: DashboardPosition | None


RefinementOp = (
    SetChannel
    | SetOrder
    | SetOrientation
    | SetLegend
    | SetColorRange
    | SetAxisBounds
    | SetTitle
    | SetDashboardPosition
)


def _require_axes(model: VisualizationModel) -> AxisVisualization:
    if not isinstance(model.body, AxisVisualization):
        raise UnknownAxisError("model has no axes to refine")
    return model.body


def _replace_axes(model: VisualizationModel, axes) -> VisualizationModel:
    return dataclasses.replace(model, body=AxisVisualization(axes=tuple(axes)))


def _apply_set_channel(model: VisualizationModel, op: SetChannel) -> VisualizationModel:
    body = _require_axes(model)
    target = body.axis_for(op.attribute)
    if target is None:
        raise UnknownModelAttributeError(f"no axis carries attribute {op.attribute!r}")
    if target.channel == op.channel:
        return model
    occupant = body.axis_on(op.channel)
    if not op.swap:
        if occupant is not None:
            raise ChannelOccupiedError(
                f"channel {op.channel.value} is already assigned to "
                f"{_axis_label(occupant)}"
            )
        raise DuplicateAssignmentError(
            f"attribute {op.attribute!r} is already on channel {target.channel.value}; "
            "reassigning requires a swap"
        )
    axes = []
    for axis in body.axes:
        if axis is target:
            axes.append(dataclasses.replace(axis, channel=op.channel))
        elif occupant is not None and axis is occupant:
            axes.append(dataclasses.replace(axis, channel=target.channel))
        else:
            axes.append(axis)
    return _replace_axes(model, axes)


def _axis_label(axis) -> str:
    return axis.attribute.name if axis.attribute is not None else f"axis {axis.name!r}"


def _apply_set_order(model: VisualizationModel, op: SetOrder) -> VisualizationModel:
    body = _require_axes(model)
    target = body.axis_for(op.attribute)
    if target is None:
        raise UnknownModelAttributeError(f"no axis carries attribute {op.attribute!r}")
    axes = [
        dataclasses.replace(axis, order_role=(axis is target)) for axis in body.axes
    ]
    return _replace_axes(model, axes)


def _apply_set_orientation(model: VisualizationModel, op: SetOrientation) -> VisualizationModel:
    free = model.graphic_type in ORIENTATION_FREE
    if free and op.orientation != Orientation.ANY:
        raise OrientationNotApplicableError(
            f"{model.graphic_type.value} has no orientation"
        )
    if not free and op.orientation == Orientation.ANY:
        raise OrientationNotApplicableError(
            f"{model.graphic_type.value} is oriented; pick Horizontal or Vertical"
        )
    return dataclasses.replace(model, orientation=op.orientation)


def _apply_set_axis_bounds(model: VisualizationModel, op: SetAxisBounds) -> VisualizationModel:
    body = _require_axes(model)
    target = body.axis_on(op.channel)
    if target is None:
        raise UnknownAxisError(f"no axis on channel {op.channel.value}")
    if (
        op.min_value is not None
        and op.max_value is not None
        and op.min_value >= op.max_value
    ):
        raise InvalidBoundsError(
            f"minimum {op.min_value} is not below maximum {op.max_value}"
        )
    axes = [
        dataclasses.replace(axis, min_value=op.min_value, max_value=op.max_value)
        if axis is target
        else axis
        for axis in body.axes
    ]
    return _replace_axes(model, axes)


def apply_refinement(model: VisualizationModel, op: RefinementOp) -> VisualizationModel:
    """Apply one refinement; returns a new model, the input is untouched."""
    if isinstance(op, SetChannel):
        result = _apply_set_channel(model, op)
    elif isinstance(op, SetOrder):
        result = _apply_set_order(model, op)
    elif isinstance(op, SetOrientation):
        result = _apply_set_orientation(model, op)
    elif isinstance(op, SetLegend):
        result = dataclasses.replace(model, legend=op.legend)
    elif isinstance(op, SetColorRange):
        result = dataclasses.replace(model, color_range=op.color_range)
    elif isinstance(op, SetAxisBounds):
        result = _apply_set_axis_bounds(model, op)
    elif isinstance(op, SetTitle):
        result = dataclasses.replace(model, title=op.title)
    elif isinstance(op, SetDashboardPosition):
        result = dataclasses.replace(model, dashboard_position=op.position)
    else:
        raise TypeError(f"unknown refinement op {op!r}")

    # Closure backstop: ops whose payload would break an invariant (bad hex
    # color, non-positive legend size, negative dashboard cell) are rejected
    # here rather than each growing bespoke checks.
    before = check_model_invariants(model)
    after = check_model_invariants(result)
    new_problems = [d for d in after if d not in before]
    if new_problems:
        raise RefinementRejectedError(new_problems)
    return result


def apply_refinements(model: VisualizationModel, ops) -> VisualizationModel:
    """Apply a sequence transactionally: any failure leaves the input model current."""
    current = model
    for op in ops:
        current = apply_refinement(current, op)
    return current
