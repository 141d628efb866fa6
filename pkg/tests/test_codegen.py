"""ChartDoc, GraphDoc, and HTML generation: byte determinism, data
projection, embedding fidelity, and the error surface."""

from __future__ import annotations

import dataclasses
import json
import pathlib

import pytest

from conftest import REFINE_OPS
from goalviz.codegen import (
    chartdoc_payload,
    extract_chartdoc,
    generate_chartdoc,
    generate_graphdoc,
    generate_html,
    graphdoc_payload,
    interaction_flags,
)
from goalviz.codegen.html import DOC_SCRIPT_OPEN
from goalviz.errors import (
    DanglingEdgeError,
    ModelInvalidError,
    UnsupportedGraphicTypeError,
)
from goalviz.profiling import Column, Dataset
from goalviz.vismodel import (
    DEFAULT_COLOR_RANGE,
    EdgeBinding,
    GraphicType,
    GraphVisualization,
    NodeBinding,
    Orientation,
    SetTitle,
    VisualizationModel,
    apply_refinement,
    apply_refinements,
)

GOLDEN = pathlib.Path(__file__).parent / "golden" / "unpaid-bills-by-type.chartdoc.json"


@pytest.fixture
def refined(by_type):
    by_type.model = apply_refinements(by_type.model, REFINE_OPS)
    return by_type


# --- ChartDoc ---------------------------------------------------------------


def test_refined_sample_matches_golden_bytes(refined):
    text = generate_chartdoc(refined.model, refined.dataset)
    assert text == GOLDEN.read_text(encoding="utf-8")


def test_generation_is_deterministic(refined):
    first = generate_chartdoc(refined.model, refined.dataset)
    second = generate_chartdoc(refined.model, refined.dataset)
    assert first == second


def test_encodings_mirror_model_axes(by_type):
    payload = chartdoc_payload(by_type.model, by_type.dataset)
    axes = by_type.model.body.axes
    assert len(payload["encodings"]) == len(axes)
    for axis in axes:
        encoding = payload["encodings"][axis.channel.value]
        assert encoding["attribute"] == axis.attribute.name
        assert encoding["scale_type"] == axis.attribute.type.value
        assert encoding["min"] == axis.min_value
        assert encoding["max"] == axis.max_value
        assert encoding["order_role"] == axis.order_role


def test_data_rows_project_encoded_attributes(by_type):
    payload = chartdoc_payload(by_type.model, by_type.dataset)
    encoded = {"Type", "Province", "Amount"}
    assert len(payload["data"]) == by_type.dataset.row_count
    for doc_row, source_row in zip(payload["data"], by_type.dataset.rows()):
        assert set(doc_row) == encoded
        for name in encoded:
            assert doc_row[name] == source_row[name]


def test_rows_with_null_encoded_cells_are_dropped(by_type):
    dataset = Dataset(
        columns=(
            Column("Type", ("Vehicle tax", "Waste tax", "Water tax", None)),
            Column("Province", ("Alicante", "Valencia", "Castellon", "Alicante")),
            Column("Amount", (1200.5, None, 180.0, 95.0)),
            Column("Note", (None, "late", "late", "late")),
        )
    )
    payload = chartdoc_payload(by_type.model, dataset)
    # Rows 1 and 3 have nulls in encoded columns; row 0's null sits in the
    # unencoded Note column and survives.
    assert len(payload["data"]) == 2
    assert payload["data"][0] == {
        "Type": "Vehicle tax",
        "Province": "Alicante",
        "Amount": 1200.5,
    }
    assert payload["data"][1] == {
        "Type": "Water tax",
        "Province": "Castellon",
        "Amount": 180,
    }


def test_chartdoc_bytes_contain_no_angle_bracket(by_type):
    model = apply_refinement(by_type.model, SetTitle("Bills </script> by type"))
    text = generate_chartdoc(model, by_type.dataset)
    assert "<" not in text
    assert "\\u003c" in text
    assert json.loads(text)["title"] == "Bills </script> by type"


def test_unsupported_graphic_type_is_rejected(by_type):
    model = dataclasses.replace(by_type.model, graphic_type=GraphicType.CHOROPLETH_MAP)
    with pytest.raises(UnsupportedGraphicTypeError, match="choropleth_map"):
        generate_chartdoc(model, by_type.dataset)


def test_invalid_model_is_rejected(by_type):
    body = by_type.model.body
    model = dataclasses.replace(
        by_type.model, body=dataclasses.replace(body, axes=body.axes + body.axes[:1])
    )
    with pytest.raises(ModelInvalidError) as excinfo:
        generate_chartdoc(model, by_type.dataset)
    assert excinfo.value.diagnostics


def test_encoded_attribute_must_be_a_dataset_column(by_type):
    dataset = Dataset(
        columns=(
            Column("Province", ("Alicante",)),
            Column("Amount", (10.0,)),
        )
    )
    with pytest.raises(ModelInvalidError, match="'Type'"):
        generate_chartdoc(by_type.model, dataset)


# --- HTML page --------------------------------------------------------------


def test_html_page_shape(refined):
    doc = generate_chartdoc(refined.model, refined.dataset)
    page = generate_html(doc)
    assert page.startswith("<!DOCTYPE html>")
    assert "<title>Unpaid bills by type</title>" in page
    assert DOC_SCRIPT_OPEN in page


def test_html_title_is_escaped(by_type):
    model = apply_refinement(by_type.model, SetTitle("Bills & <co>"))
    page = generate_html(generate_chartdoc(model, by_type.dataset))
    assert "<title>Bills &amp; &lt;co&gt;</title>" in page
    assert "<co>" not in page


def test_extraction_inverts_embedding(refined):
    doc = generate_chartdoc(refined.model, refined.dataset)
    assert extract_chartdoc(generate_html(doc)) == doc


def test_extraction_requires_an_embedded_document():
    with pytest.raises(ValueError, match="no embedded chart document"):
        extract_chartdoc("<!DOCTYPE html><html></html>")


def test_html_generation_is_deterministic(refined):
    doc = generate_chartdoc(refined.model, refined.dataset)
    assert generate_html(doc) == generate_html(doc)


def test_interaction_flags_mapping():
    assert interaction_flags([]) == {
        "pan_zoom": False,
        "legend_filter": False,
        "tooltips": False,
    }
    assert interaction_flags(["overview"]) == {
        "pan_zoom": False,
        "legend_filter": False,
        "tooltips": False,
    }
    assert interaction_flags(["zoom"])["pan_zoom"] is True
    assert interaction_flags(["filter"])["legend_filter"] is True
    assert interaction_flags(["details_on_demand"])["tooltips"] is True
    assert interaction_flags(["overview", "zoom", "filter", "details_on_demand"]) == {
        "pan_zoom": True,
        "legend_filter": True,
        "tooltips": True,
    }


def test_flags_are_embedded_in_page(by_type):
    doc = generate_chartdoc(by_type.model, by_type.dataset)
    page = generate_html(doc)
    flags = json.dumps(interaction_flags(["overview"]))
    assert f"const chartFlags = {flags};" in page


# --- GraphDoc ---------------------------------------------------------------


def graph_model(graphic, nodes, edges):
    return VisualizationModel(
        title="Org chart",
        legend=None,
        graphic_type=graphic,
        interactions=(),
        dashboard_position=None,
        orientation=Orientation.ANY,
        color_range=DEFAULT_COLOR_RANGE,
        body=GraphVisualization(nodes=nodes, edges=edges),
    )


TREE_DATASET = Dataset(
    columns=(
        Column("Unit", ("Council", "Finance", "Parks", "Collections")),
        Column("Parent", (None, "Council", "Council", "Finance")),
    )
)

TREE_MODEL = graph_model(
    GraphicType.TREEMAP,
    NodeBinding(id_column="Unit", label_column="Unit"),
    EdgeBinding(source_column="Parent", target_column="Unit"),
)


def test_tree_topology():
    payload = graphdoc_payload(TREE_MODEL, TREE_DATASET)
    assert payload["nodes"] == [
        {"id": "Council", "label": "Council"},
        {"id": "Finance", "label": "Finance"},
        {"id": "Parks", "label": "Parks"},
        {"id": "Collections", "label": "Collections"},
    ]
    # The root's null-parent row marks the root; it is not an edge.
    assert payload["edges"] == [
        {"source": "Council", "target": "Finance"},
        {"source": "Council", "target": "Parks"},
        {"source": "Finance", "target": "Collections"},
    ]


def test_unbound_nodes_collected_from_edges_in_first_appearance_order():
    dataset = Dataset(
        columns=(
            Column("From", ("a", "b", "a")),
            Column("To", ("b", "c", "c")),
        )
    )
    model = graph_model(
        GraphicType.NODE_LINK_GRAPH, None, EdgeBinding("From", "To")
    )
    payload = graphdoc_payload(model, dataset)
    assert payload["nodes"] == [
        {"id": "a", "label": "a"},
        {"id": "b", "label": "b"},
        {"id": "c", "label": "c"},
    ]
    assert payload["edges"] == [
        {"source": "a", "target": "b"},
        {"source": "b", "target": "c"},
        {"source": "a", "target": "c"},
    ]


def test_dangling_edge_endpoint_is_an_error():
    dataset = Dataset(
        columns=(
            Column("Unit", ("Council", "Finance")),
            Column("Parent", (None, "Cabinet")),
        )
    )
    with pytest.raises(DanglingEdgeError, match="'Cabinet'"):
        graphdoc_payload(TREE_MODEL, dataset)


def test_missing_endpoints_can_be_synthesized():
    dataset = Dataset(
        columns=(
            Column("Unit", ("Council", "Finance")),
            Column("Parent", (None, "Cabinet")),
        )
    )
    payload = graphdoc_payload(TREE_MODEL, dataset, synthesize_missing=True)
    assert {"id": "Cabinet", "label": "Cabinet"} in payload["nodes"]
    assert payload["edges"] == [{"source": "Cabinet", "target": "Finance"}]


def test_null_node_ids_are_skipped():
    dataset = Dataset(
        columns=(
            Column("Unit", ("Council", None)),
            Column("Parent", (None, None)),
        )
    )
    payload = graphdoc_payload(TREE_MODEL, dataset)
    assert payload["nodes"] == [{"id": "Council", "label": "Council"}]
    assert payload["edges"] == []


def test_graphdoc_requires_a_graph_body(by_type):
    with pytest.raises(DanglingEdgeError, match="no graph body"):
        graphdoc_payload(by_type.model, by_type.dataset)


def test_generated_graphdoc_is_canonical_json():
    first = generate_graphdoc(TREE_MODEL, TREE_DATASET)
    assert first == generate_graphdoc(TREE_MODEL, TREE_DATASET)
    assert first.endswith("\n")
    assert "<" not in first
    assert json.loads(first) == graphdoc_payload(TREE_MODEL, TREE_DATASET)
