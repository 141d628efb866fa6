"""Graph and tree topology export for graph-based graphics.

The GraphDoc carries topology only (node list plus edge list); layout is the
renderer's business. Node order is first appearance, edge order is row order,
so output is deterministic.
"""

from __future__ import annotations

import logging
from typing import Any

from ..errors import DanglingEdgeError
from ..jsonutil import canonical_dumps
from ..profiling import Dataset
from ..vismodel.model import GraphVisualization, VisualizationModel

log = logging.getLogger(__name__)


def graphdoc_payload(
    model: VisualizationModel,
    dataset: Dataset,
    synthesize_missing: bool = False,
) -> dict[str, Any]:
    """Nodes deduplicated by id in first-appearance order; edges in row order.

    Without a node binding every edge endpoint becomes a node. With one, an
    endpoint that never appears as a node id is a DanglingEdge unless
    ``synthesize_missing`` turns it into a label-less node instead.
    """
    body = model.body
    if not isinstance(body, GraphVisualization):
        raise DanglingEdgeError("model has no graph body")

    nodes: list[dict[str, Any]] = []
    seen: set[Any] = set()

    def add_node(node_id: Any, label: Any) -> None:
        if node_id in seen:
            return
        seen.add(node_id)
        nodes.append({"id": node_id, "label": label})

    bound = body.nodes is not None
    if bound:
        id_col, label_col = body.nodes.id_column, body.nodes.label_column
        for row in dataset.rows():
            if row[id_col] is None:
                continue
            add_node(row[id_col], row[label_col])

    edges: list[dict[str, Any]] = []
    dropped = 0
    src_col = body.edges.source_column
    dst_col = body.edges.target_column
    for row in dataset.rows():
        source, target = row[src_col], row[dst_col]
        # A null endpoint is not an edge; for tree data a null parent marks
        # the root rather than an error.
        if source is None or target is None:
            dropped += 1
            continue
        for endpoint in (source, target):
            if endpoint in seen:
                continue
            if bound and not synthesize_missing:
                raise DanglingEdgeError(
                    f"edge endpoint {endpoint!r} is not a known node id"
                )
            add_node(endpoint, endpoint)
        edges.append({"source": source, "target": target})
    if dropped:
        log.info("graphdoc %r: skipped %d row(s) with null endpoints", model.title, dropped)

    return {"nodes": nodes, "edges": edges}


def generate_graphdoc(
    model: VisualizationModel,
    dataset: Dataset,
    synthesize_missing: bool = False,
) -> str:
    return canonical_dumps(
        graphdoc_payload(model, dataset, synthesize_missing), escape_lt=True
    )
