"""Standalone HTML page generation around a ChartDoc.

The page embeds the ChartDoc bytes verbatim in a JSON script element and a
self-contained rendering runtime; no network access is needed to view it.
"""

from __future__ import annotations

import functools
import html as html_escape
import json
from importlib import resources

_PAGE = """\
<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<meta name="viewport" content="width=device-width, initial-scale=1">
<title>{title}</title>
<style>
body {{ font-family: sans-serif; margin: 1.5rem; color: #1c1c28; background: #ffffff; }}
#chart {{ max-width: 960px; }}
#chart table {{ border-collapse: collapse; font-size: 13px; }}
#chart th, #chart td {{ border: 1px solid #c8c8d0; padding: 4px 10px; text-align: left; }}
#chart th {{ background: #eef0f4; }}
</style>
</head>
<body>
<main id="chart" role="img" aria-label="{aria_title}"></main>
<script id="chart-doc" type="application/json">
{chartdoc}</script>
<script>
const chartFlags = {flags};
{runtime}</script>
</body>
</html>
"""

DOC_SCRIPT_OPEN = '<script id="chart-doc" type="application/json">\n'
DOC_SCRIPT_CLOSE = "</script>"


@functools.lru_cache(maxsize=1)
def _runtime() -> str:
    return resources.files(__package__).joinpath("runtime.js").read_text("utf-8")


def interaction_flags(interactions: list[str]) -> dict[str, bool]:
    """Overview is the static baseline; the other interaction kinds switch
    runtime behaviors on."""
    return {
        "pan_zoom": "zoom" in interactions,
        "legend_filter": "filter" in interactions,
        "tooltips": "details_on_demand" in interactions,
    }


def generate_html(chartdoc_text: str) -> str:
    doc = json.loads(chartdoc_text)
    flags = interaction_flags(doc.get("interactions", []))
    return _PAGE.format(
        title=html_escape.escape(doc["title"]),
        aria_title=html_escape.escape(doc["title"], quote=True),
        chartdoc=chartdoc_text,
        flags=json.dumps(flags),
        runtime=_runtime(),
    )


def extract_chartdoc(html_text: str) -> str:
    """Recover the embedded ChartDoc bytes; inverse of the embedding."""
    try:
        after = html_text.split(DOC_SCRIPT_OPEN, 1)[1]
        return after.split(DOC_SCRIPT_CLOSE, 1)[0]
    except IndexError:
        raise ValueError("no embedded chart document found") from None
