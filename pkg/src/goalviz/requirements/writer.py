"""Canonical text serialization of a goal model.

Output is stable: 2-space indentation, LF line endings, keyword order
``actor, process, strategic, analysis, decision, information, visualization,
goals:, interactions:, source, category, measure, shape, type``. Parsing the
output reproduces a structurally equal model.
"""

from __future__ import annotations

import io

from .model import (
    DatasourceResource,
    FlatShape,
    GoalModel,
    GraphShape,
    TreeShape,
    VisualizationRequirement,
    literal,
)

_ESCAPES = {'"': '\\"', "\\": "\\\\", "\n": "\\n", "\t": "\\t", "\r": "\\r"}


def quote(name: str) -> str:
    out = ['"']
    for ch in name:
        if ch in _ESCAPES:
            out.append(_ESCAPES[ch])
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def serialize_goal_model(model: GoalModel) -> str:
    buf = io.StringIO()

    def line(depth: int, text: str) -> None:
        buf.write("  " * depth + text + "\n")

    line(0, f"actor {quote(model.actor.name)} {literal(model.actor.kind)}")
    line(0, f"process {quote(model.process.name)}")
    for sg in model.strategic_goals:
        buf.write("\n")
        line(0, f"strategic {quote(sg.name)} {{")
        for an in sg.analyses:
            line(1, f"analysis {literal(an.kind)} {{")
            for dg in an.decision_goals:
                line(2, f"decision {quote(dg.name)} {{")
                for ig in dg.information_goals:
                    line(3, f"information {quote(ig.name)} {{")
                    if ig.visualization is not None:
                        _write_visualization(line, ig.visualization)
                    line(3, "}")
                line(2, "}")
            line(1, "}")
        line(0, "}")
    return buf.getvalue()


def _write_visualization(line, vis: VisualizationRequirement) -> None:
    line(4, f"visualization {quote(vis.name)} {{")
    if vis.goals:
        line(5, "goals: " + ", ".join(literal(g) for g in vis.goals))
    if vis.interactions:
        line(5, "interactions: " + ", ".join(literal(i) for i in vis.interactions))
    for src in vis.sources:
        _write_source(line, src)
    line(4, "}")


def _write_source(line, src: DatasourceResource) -> None:
    line(5, f"source {quote(src.uri)} {{")
    for name in src.categories:
        line(6, f"category {quote(name)}")
    for name in src.measures:
        line(6, f"measure {quote(name)}")
    shape = src.shape
    if isinstance(shape, TreeShape):
        line(6, f"shape Tree({quote(shape.parent_column)}, {quote(shape.id_column)})")
    elif isinstance(shape, GraphShape):
        line(6, f"shape Graph({quote(shape.source_column)}, {quote(shape.target_column)})")
    else:
        assert isinstance(shape, FlatShape)
    for name in sorted(src.type_overrides):
        value = src.type_overrides[name]
        line(6, f"type {quote(name)} {value.capitalize()}")
    line(5, "}")
