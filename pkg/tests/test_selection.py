"""Chart-type selection: the decision table against an independent oracle.

``expected_graphic`` below restates the selection policy as a plain if/elif
chain, written separately from the table-driven implementation, so the
exhaustive sweep checks two formulations of the policy against each other.
"""

from __future__ import annotations

import itertools
import time

from goalviz.profiling import CardinalityKind, Dimensionality, ScaleType
from goalviz.requirements.model import ActorKind, Interaction, VisGoal
from goalviz.transform import (
    SELECTION_RULES,
    VisualizationSpec,
    export_rules,
    select_graphic_type,
    select_rule,
)
from goalviz.vismodel import GraphicType

CATEGORICAL = (ScaleType.NOMINAL, ScaleType.ORDINAL)
QUANTITATIVE = (ScaleType.INTERVAL, ScaleType.RATIO)
SEQUENTIAL = (ScaleType.ORDINAL, ScaleType.INTERVAL)


def expected_graphic(spec: VisualizationSpec) -> GraphicType:
    """Independent statement of the selection policy, in priority order."""
    goals = set(spec.goals)
    dim = spec.dimensionality
    low = spec.cardinality is CardinalityKind.LOW

    def indep(*allowed):
        return spec.independent_type is None or spec.independent_type in allowed

    def dep(*allowed):
        return spec.dependent_type is None or spec.dependent_type in allowed

    if dim is Dimensionality.TREE:
        return GraphicType.TREEMAP
    if dim is Dimensionality.GRAPH:
        return GraphicType.NODE_LINK_GRAPH
    if VisGoal.GEOSPATIAL in goals:
        return GraphicType.CHOROPLETH_MAP
    if dim is Dimensionality.ONE_DIMENSIONAL:
        return GraphicType.SINGLE_VALUE_CARD
    if (
        goals >= {VisGoal.COMPOSITION, VisGoal.COMPARISON}
        and dim is Dimensionality.N_DIMENSIONAL
        and low
        and indep(*CATEGORICAL)
        and dep(*QUANTITATIVE)
    ):
        return GraphicType.STACKED_COLUMN_CHART
    if (
        goals & {VisGoal.COMPARISON, VisGoal.ORDER}
        and dim is Dimensionality.TWO_DIMENSIONAL
        and low
        and indep(*CATEGORICAL)
        and dep(*QUANTITATIVE)
    ):
        return GraphicType.COLUMN_CHART
    if goals >= {VisGoal.TREND, VisGoal.COMPOSITION} and indep(*SEQUENTIAL) and dep(*QUANTITATIVE):
        return GraphicType.AREA_CHART
    if VisGoal.TREND in goals and indep(*SEQUENTIAL) and dep(*QUANTITATIVE):
        return GraphicType.LINE_CHART
    if VisGoal.COMPOSITION in goals and dim is Dimensionality.TWO_DIMENSIONAL and low:
        return GraphicType.PIE_CHART
    if VisGoal.DISTRIBUTION in goals and not low and dep(*QUANTITATIVE):
        return GraphicType.HISTOGRAM
    if (
        goals & {VisGoal.RELATIONSHIP, VisGoal.CLUSTER}
        and dim is Dimensionality.TWO_DIMENSIONAL
        and indep(*QUANTITATIVE)
        and dep(*QUANTITATIVE)
    ):
        return GraphicType.SCATTER_PLOT
    if (
        goals & {VisGoal.RELATIONSHIP, VisGoal.CLUSTER}
        and dim is Dimensionality.N_DIMENSIONAL
        and indep(*QUANTITATIVE)
        and dep(*QUANTITATIVE)
    ):
        return GraphicType.BUBBLE_CHART
    if (
        dim is Dimensionality.N_DIMENSIONAL
        and not low
        and indep(ScaleType.NOMINAL)
        and dep(*QUANTITATIVE)
    ):
        return (
            GraphicType.HEATMAP if spec.user is ActorKind.TECH else GraphicType.TABLE
        )
    return GraphicType.TABLE


def make_spec(goals, user, dim, card, indep, dep) -> VisualizationSpec:
    return VisualizationSpec(
        goals=tuple(goals),
        interaction=(Interaction.OVERVIEW,),
        user=user,
        dimensionality=dim,
        cardinality=card,
        independent_type=indep,
        dependent_type=dep,
    )


def coordinate_space(goal_choices):
    """Every combination of the six non-interaction coordinates."""
    scale_options = list(ScaleType) + [None]
    return itertools.product(
        goal_choices,
        list(ActorKind),
        list(Dimensionality),
        list(CardinalityKind),
        scale_options,
        scale_options,
    )


def sweep(goal_choices):
    mismatches = []
    count = 0
    for goals, user, dim, card, indep, dep in coordinate_space(goal_choices):
        spec = make_spec(goals, user, dim, card, indep, dep)
        got = select_graphic_type(spec)
        want = expected_graphic(spec)
        count += 1
        if got is not want:
            mismatches.append((spec, got, want))
    return count, mismatches


def test_exhaustive_single_goal_sweep_matches_oracle():
    singles = [(goal,) for goal in VisGoal]
    start = time.perf_counter()
    count, mismatches = sweep(singles)
    elapsed = time.perf_counter() - start
    assert count == 8 * 2 * 5 * 2 * 5 * 5
    assert mismatches == [], mismatches[:5]
    assert elapsed < 5.0


def test_exhaustive_goal_pair_sweep_matches_oracle():
    pairs = list(itertools.combinations(list(VisGoal), 2))
    count, mismatches = sweep(pairs)
    assert count == 28 * 2 * 5 * 2 * 5 * 5
    assert mismatches == [], mismatches[:5]


def test_selection_is_deterministic_and_total():
    spec = make_spec(
        (VisGoal.ORDER,),
        ActorKind.LAY,
        Dimensionality.N_DIMENSIONAL,
        CardinalityKind.HIGH,
        ScaleType.ORDINAL,
        ScaleType.RATIO,
    )
    first = select_rule(spec)
    second = select_rule(spec)
    assert first is second
    assert first.rule_id == "R12"
    assert first.graphic is GraphicType.TABLE


def test_sample_stacked_column_selection(by_type):
    assert by_type.rule.rule_id == "R5"
    assert by_type.graphic is GraphicType.STACKED_COLUMN_CHART
    spec = by_type.spec
    assert spec.goals == (VisGoal.COMPOSITION, VisGoal.COMPARISON)
    assert spec.interaction == (Interaction.OVERVIEW,)
    assert spec.user is ActorKind.LAY
    assert spec.dimensionality is Dimensionality.N_DIMENSIONAL
    assert spec.cardinality is CardinalityKind.LOW
    assert spec.independent_type is ScaleType.NOMINAL
    assert spec.dependent_type is ScaleType.RATIO


def test_structure_beats_goals():
    spec = make_spec(
        (VisGoal.GEOSPATIAL,),
        ActorKind.LAY,
        Dimensionality.TREE,
        CardinalityKind.LOW,
        None,
        None,
    )
    assert select_graphic_type(spec) is GraphicType.TREEMAP


def test_trend_alone_is_a_line_composition_makes_it_an_area():
    base = dict(
        user=ActorKind.LAY,
        dim=Dimensionality.TWO_DIMENSIONAL,
        card=CardinalityKind.HIGH,
        indep=ScaleType.INTERVAL,
        dep=ScaleType.RATIO,
    )
    line = make_spec((VisGoal.TREND,), *base.values())
    area = make_spec((VisGoal.TREND, VisGoal.COMPOSITION), *base.values())
    assert select_graphic_type(line) is GraphicType.LINE_CHART
    assert select_graphic_type(area) is GraphicType.AREA_CHART


def test_audience_splits_the_dense_table_case():
    def spec_for(user):
        return make_spec(
            (VisGoal.COMPARISON,),
            user,
            Dimensionality.N_DIMENSIONAL,
            CardinalityKind.HIGH,
            ScaleType.NOMINAL,
            ScaleType.RATIO,
        )

    assert select_graphic_type(spec_for(ActorKind.TECH)) is GraphicType.HEATMAP
    assert select_graphic_type(spec_for(ActorKind.LAY)) is GraphicType.TABLE


def test_absent_scale_type_matches_any_type_constraint():
    spec = make_spec(
        (VisGoal.COMPOSITION, VisGoal.COMPARISON),
        ActorKind.LAY,
        Dimensionality.N_DIMENSIONAL,
        CardinalityKind.LOW,
        None,
        ScaleType.RATIO,
    )
    assert select_rule(spec).rule_id == "R5"


def test_rule_ids_are_unique_and_end_with_the_catch_all():
    ids = [rule.rule_id for rule in SELECTION_RULES]
    assert len(set(ids)) == len(ids)
    last = SELECTION_RULES[-1]
    assert last.graphic is GraphicType.TABLE
    assert all(
        getattr(last, field) is None
        for field in (
            "goals_all",
            "goals_any",
            "dimensionalities",
            "cardinalities",
            "users",
            "independent",
            "dependent",
        )
    )


def test_export_rules_lists_every_rule():
    text = export_rules()
    for rule in SELECTION_RULES:
        assert f"| {rule.rule_id} |" in text
    assert text.count("|") >= (len(SELECTION_RULES) + 2) * 9
    assert "top to bottom" in text
