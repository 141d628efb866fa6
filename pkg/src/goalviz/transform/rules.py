"""Ordered decision table mapping a visualization spec to a graphic type.

The table is data: each row lists the coordinate constraints it needs, the
first row whose constraints all hold wins, and the last row is a catch-all,
so selection is total and deterministic. An absent scale type satisfies any
type constraint; the other five coordinates are always present.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..profiling import CardinalityKind, Dimensionality, ScaleType
from ..requirements.model import ActorKind, VisGoal, literal
from ..vismodel.model import GraphicType
from .spec import VisualizationSpec

_QUANT = frozenset({ScaleType.INTERVAL, ScaleType.RATIO})
_CATEGORICAL = frozenset({ScaleType.NOMINAL, ScaleType.ORDINAL})


@dataclass(frozen=True)
class SelectionRule:
    """One row; a None constraint means the coordinate does not matter."""

    rule_id: str
    graphic: GraphicType
    goals_all: frozenset[VisGoal] | None = None
    goals_any: frozenset[VisGoal] | None = None
    dimensionalities: frozenset[Dimensionality] | None = None
    cardinalities: frozenset[CardinalityKind] | None = None
    users: frozenset[ActorKind] | None = None
    independent: frozenset[ScaleType] | None = None
    dependent: frozenset[ScaleType] | None = None

    def matches(self, spec: VisualizationSpec) -> bool:
        goals = spec.goal_set
        if self.goals_all is not None and not self.goals_all <= goals:
            return False
        if self.goals_any is not None and not self.goals_any & goals:
            return False
        if self.dimensionalities is not None and spec.dimensionality not in self.dimensionalities:
            return False
        if self.cardinalities is not None and spec.cardinality not in self.cardinalities:
            return False
        if self.users is not None and spec.user not in self.users:
            return False
        if (
            self.independent is not None
            and spec.independent_type is not None
            and spec.independent_type not in self.independent
        ):
            return False
        if (
            self.dependent is not None
            and spec.dependent_type is not None
            and spec.dependent_type not in self.dependent
        ):
            return False
        return True


SELECTION_RULES: tuple[SelectionRule, ...] = (
    SelectionRule("R1", GraphicType.TREEMAP, dimensionalities=frozenset({Dimensionality.TREE})),
    SelectionRule(
        "R2", GraphicType.NODE_LINK_GRAPH, dimensionalities=frozenset({Dimensionality.GRAPH})
    ),
    SelectionRule("R3", GraphicType.CHOROPLETH_MAP, goals_any=frozenset({VisGoal.GEOSPATIAL})),
    SelectionRule(
        "R4",
        GraphicType.SINGLE_VALUE_CARD,
        dimensionalities=frozenset({Dimensionality.ONE_DIMENSIONAL}),
    ),
    SelectionRule(
        "R5",
        GraphicType.STACKED_COLUMN_CHART,
        goals_all=frozenset({VisGoal.COMPOSITION, VisGoal.COMPARISON}),
        dimensionalities=frozenset({Dimensionality.N_DIMENSIONAL}),
        cardinalities=frozenset({CardinalityKind.LOW}),
        independent=_CATEGORICAL,
        dependent=_QUANT,
    ),
    SelectionRule(
        "R6",
        GraphicType.COLUMN_CHART,
        goals_any=frozenset({VisGoal.COMPARISON, VisGoal.ORDER}),
        dimensionalities=frozenset({Dimensionality.TWO_DIMENSIONAL}),
        cardinalities=frozenset({CardinalityKind.LOW}),
        independent=_CATEGORICAL,
        dependent=_QUANT,
    ),
    SelectionRule(
        "R7a",
        GraphicType.AREA_CHART,
        goals_all=frozenset({VisGoal.TREND, VisGoal.COMPOSITION}),
        independent=frozenset({ScaleType.ORDINAL, ScaleType.INTERVAL}),
        dependent=_QUANT,
    ),
    SelectionRule(
        "R7b",
        GraphicType.LINE_CHART,
        goals_any=frozenset({VisGoal.TREND}),
        independent=frozenset({ScaleType.ORDINAL, ScaleType.INTERVAL}),
        dependent=_QUANT,
    ),
    SelectionRule(
        "R8",
        GraphicType.PIE_CHART,
        goals_any=frozenset({VisGoal.COMPOSITION}),
        dimensionalities=frozenset({Dimensionality.TWO_DIMENSIONAL}),
        cardinalities=frozenset({CardinalityKind.LOW}),
    ),
    SelectionRule(
        "R9",
        GraphicType.HISTOGRAM,
        goals_any=frozenset({VisGoal.DISTRIBUTION}),
        cardinalities=frozenset({CardinalityKind.HIGH}),
        dependent=_QUANT,
    ),
    SelectionRule(
        "R10a",
        GraphicType.SCATTER_PLOT,
        goals_any=frozenset({VisGoal.RELATIONSHIP, VisGoal.CLUSTER}),
        dimensionalities=frozenset({Dimensionality.TWO_DIMENSIONAL}),
        independent=_QUANT,
        dependent=_QUANT,
    ),
    SelectionRule(
        "R10b",
        GraphicType.BUBBLE_CHART,
        goals_any=frozenset({VisGoal.RELATIONSHIP, VisGoal.CLUSTER}),
        dimensionalities=frozenset({Dimensionality.N_DIMENSIONAL}),
        independent=_QUANT,
        dependent=_QUANT,
    ),
    SelectionRule(
        "R11a",
        GraphicType.HEATMAP,
        dimensionalities=frozenset({Dimensionality.N_DIMENSIONAL}),
        cardinalities=frozenset({CardinalityKind.HIGH}),
        users=frozenset({ActorKind.TECH}),
        independent=frozenset({ScaleType.NOMINAL}),
        dependent=_QUANT,
    ),
    SelectionRule(
        "R11b",
        GraphicType.TABLE,
        dimensionalities=frozenset({Dimensionality.N_DIMENSIONAL}),
        cardinalities=frozenset({CardinalityKind.HIGH}),
        users=frozenset({ActorKind.LAY}),
        independent=frozenset({ScaleType.NOMINAL}),
        dependent=_QUANT,
    ),
    SelectionRule("R12", GraphicType.TABLE),
)


def select_rule(spec: VisualizationSpec) -> SelectionRule:
    for rule in SELECTION_RULES:
        if rule.matches(spec):
            return rule
    raise AssertionError("decision table lost its catch-all row")


def select_graphic_type(spec: VisualizationSpec) -> GraphicType:
    return select_rule(spec).graphic


def _goal_cell(rule: SelectionRule) -> str:
    parts = []
    if rule.goals_all is not None:
        parts.append("all of " + ", ".join(sorted(literal(g) for g in rule.goals_all)))
    if rule.goals_any is not None:
        parts.append("any of " + ", ".join(sorted(literal(g) for g in rule.goals_any)))
    return "; ".join(parts) if parts else "any"


def _set_cell(members, order) -> str:
    if members is None:
        return "any"
    return ", ".join(literal(m) for m in order if m in members)


def export_rules() -> str:
    """The decision table as a Markdown reference document, one row per rule."""
    header = [
        "| Rule | Goals | Dimensionality | Cardinality | User | Independent | Dependent | Graphic type |",
        "| --- | --- | --- | --- | --- | --- | --- | --- |",
    ]
    rows = []
    for rule in SELECTION_RULES:
        rows.append(
            "| {} | {} | {} | {} | {} | {} | {} | {} |".format(
                rule.rule_id,
                _goal_cell(rule),
                _set_cell(rule.dimensionalities, list(Dimensionality)),
                _set_cell(rule.cardinalities, list(CardinalityKind)),
                _set_cell(rule.users, list(ActorKind)),
                _set_cell(rule.independent, list(ScaleType)),
                _set_cell(rule.dependent, list(ScaleType)),
                literal(rule.graphic),
            )
        )
    lines = [
        "# Graphic type selection rules",
        "",
        "Rules are evaluated top to bottom; the first matching row decides.",
        "A cell reading `any` places no constraint on that coordinate, and a",
        "specification whose independent or dependent type is absent satisfies",
        "every type constraint.",
        "",
        *header,
        *rows,
        "",
    ]
    return "\n".join(lines)
