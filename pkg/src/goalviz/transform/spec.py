"""The seven-coordinate visualization specification.

This is the fan-in point of the pipeline: requirement goals, interactions and
actor kind meet the profiled structure of the data. Chart selection consumes
nothing but these seven coordinates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from ..errors import ProfileMismatchError, SchemaError
from ..profiling import CardinalityKind, DataProfile, Dimensionality, ScaleType
from ..requirements.model import (
    ActorKind,
    Interaction,
    VisGoal,
    VisualizationRequirement,
)


@dataclass(frozen=True)
class VisualizationSpec:
    """Exactly seven coordinates; a missing scale type is None (the
    absent marker), which still counts as a present coordinate."""

    goals: tuple[VisGoal, ...]
    interaction: tuple[Interaction, ...]
    user: ActorKind
    dimensionality: Dimensionality
    cardinality: CardinalityKind
    independent_type: ScaleType | None
    dependent_type: ScaleType | None

    @property
    def goal_set(self) -> frozenset[VisGoal]:
        return frozenset(self.goals)


def assemble_spec(
    requirement: VisualizationRequirement,
    actor_kind: ActorKind,
    profile: DataProfile,
) -> VisualizationSpec:
    """Field-wise assembly: goals/interaction/user from the requirement side,
    the other four coordinates from the profile."""
    source = requirement.sources[0]
    declared = set(source.attributes)
    profiled = set(profile.attribute_types)
    if declared != profiled:
        missing = sorted(declared - profiled)
        extra = sorted(profiled - declared)
        parts = []
        if missing:
            parts.append(f"missing from profile: {', '.join(missing)}")
        if extra:
            parts.append(f"not declared by requirement: {', '.join(extra)}")
        raise ProfileMismatchError(
            f"profile does not match requirement {requirement.name!r} ({'; '.join(parts)})"
        )
    return VisualizationSpec(
        goals=requirement.goals,
        interaction=requirement.interactions,
        user=actor_kind,
        dimensionality=profile.dimensionality,
        cardinality=profile.cardinality.kind,
        independent_type=profile.independent_type,
        dependent_type=profile.dependent_type,
    )


def spec_payload(spec: VisualizationSpec) -> dict[str, Any]:
    """JSON-ready form, field order fixed."""
    return {
        "goals": [g.value for g in spec.goals],
        "interaction": [i.value for i in spec.interaction],
        "user": spec.user.value,
        "dimensionality": spec.dimensionality.value,
        "cardinality": spec.cardinality.value,
        "independent_type": None if spec.independent_type is None else spec.independent_type.value,
        "dependent_type": None if spec.dependent_type is None else spec.dependent_type.value,
    }


def _enum(enum_cls, value: Any, path: str):
    if not isinstance(value, str):
        raise SchemaError(f"{path}: expected a string")
    try:
        return enum_cls(value)
    except ValueError:
        allowed = ", ".join(m.value for m in enum_cls)
        raise SchemaError(f"{path}: unknown value {value!r}; expected one of: {allowed}") from None


def parse_spec_payload(raw: Any) -> VisualizationSpec:
    if isinstance(raw, str):
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise SchemaError("$: expected an object")
    for key in (
        "goals",
        "interaction",
        "user",
        "dimensionality",
        "cardinality",
        "independent_type",
        "dependent_type",
    ):
        if key not in raw:
            raise SchemaError(f"$: missing field {key!r}")
    if not isinstance(raw["goals"], list) or not isinstance(raw["interaction"], list):
        raise SchemaError("$.goals and $.interaction must be arrays")

    def opt_scale(value: Any, path: str) -> ScaleType | None:
        if value is None:
            return None
        return _enum(ScaleType, value, path)

    return VisualizationSpec(
        goals=tuple(_enum(VisGoal, g, f"$.goals[{i}]") for i, g in enumerate(raw["goals"])),
        interaction=tuple(
            _enum(Interaction, x, f"$.interaction[{i}]")
            for i, x in enumerate(raw["interaction"])
        ),
        user=_enum(ActorKind, raw["user"], "$.user"),
        dimensionality=_enum(Dimensionality, raw["dimensionality"], "$.dimensionality"),
        cardinality=_enum(CardinalityKind, raw["cardinality"], "$.cardinality"),
        independent_type=opt_scale(raw["independent_type"], "$.independent_type"),
        dependent_type=opt_scale(raw["dependent_type"], "$.dependent_type"),
    )
