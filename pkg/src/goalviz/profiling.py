"""Tabular data ingestion and profiling.

Computes the per-attribute scale types plus the cardinality and
dimensionality classes that, together with the requirements model, drive
chart-type selection. All functions are pure; profiles are invariant under
row reordering.
"""

from __future__ import annotations

import csv
import datetime
import enum
import json
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    AllNullColumnError,
    DuplicateColumnError,
    EmptySelectionError,
    MissingHeaderError,
    RaggedRowsError,
    UnknownAttributeError,
    ZeroAttributesError,
)
from .requirements.model import DatasourceResource, GraphShape, SourceShape, TreeShape

# A typed CSV cell; empty fields load as None.
Cell = str | int | float | datetime.date | None


class ScaleType(enum.Enum):
    NOMINAL = "nominal"
    ORDINAL = "ordinal"
    INTERVAL = "interval"
    RATIO = "ratio"


class CardinalityKind(enum.Enum):
    LOW = "low"
    HIGH = "high"


class Dimensionality(enum.Enum):
    ONE_DIMENSIONAL = "one_dimensional"
    TWO_DIMENSIONAL = "two_dimensional"
    N_DIMENSIONAL = "n_dimensional"
    TREE = "tree"
    GRAPH = "graph"


@dataclass(frozen=True)
class CardinalityClass:
    kind: CardinalityKind
    max_distinct: int


@dataclass(frozen=True)
class Column:
    name: str
    values: tuple


@dataclass(frozen=True)
class Dataset:
    columns: tuple[Column, ...]

    def __post_init__(self):
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            raise DuplicateColumnError("column names must be unique")
        lengths = {len(c.values) for c in self.columns}
        if len(lengths) > 1:
            raise RaggedRowsError(-1, min(lengths), max(lengths))

    @property
    def row_count(self) -> int:
        return len(self.columns[0].values) if self.columns else 0

    @property
    def column_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.columns)

    def column(self, name: str) -> Column:
        for col in self.columns:
            if col.name == name:
                return col
        raise UnknownAttributeError(f"no column named {name!r}")

    def rows(self) -> list[dict]:
        keys = self.column_names
        return [
            {k: self.columns[i].values[r] for i, k in enumerate(keys)}
            for r in range(self.row_count)
        ]


_MONTHS = ("january", "february", "march", "april", "may", "june", "july",
           "august", "september", "october", "november", "december")
_MONTHS_ABBR = ("jan", "feb", "mar", "apr", "may", "jun", "jul", "aug",
                "sep", "oct", "nov", "dec")
_WEEKDAYS = ("monday", "tuesday", "wednesday", "thursday", "friday",
             "saturday", "sunday")
_WEEKDAYS_ABBR = ("mon", "tue", "wed", "thu", "fri", "sat", "sun")

DEFAULT_ORDINAL_LEXICONS: tuple[tuple[str, ...], ...] = (
    _MONTHS,
    _MONTHS_ABBR,
    _WEEKDAYS,
    _WEEKDAYS_ABBR,
    ("low", "medium", "high"),
)

DEFAULT_CARDINALITY_THRESHOLD = 50


@dataclass(frozen=True)
class ProfilerConfig:
    cardinality_threshold: int = DEFAULT_CARDINALITY_THRESHOLD
    ordinal_lexicons: tuple[tuple[str, ...], ...] = DEFAULT_ORDINAL_LEXICONS

    def __post_init__(self):
        if self.cardinality_threshold < 2:
            raise ValueError("cardinality_threshold must be >= 2")

    @classmethod
    def from_file(cls, path: str | Path) -> "ProfilerConfig":
        """Load from a project-level JSON file; missing keys keep defaults."""
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        if not isinstance(data, dict):
            raise ValueError("profiler config must be a JSON object")
        unknown = set(data) - {"cardinality_threshold", "ordinal_lexicons"}
        if unknown:
            raise ValueError(f"unknown profiler config keys: {sorted(unknown)}")
        kwargs = {}
        if "cardinality_threshold" in data:
            kwargs["cardinality_threshold"] = int(data["cardinality_threshold"])
        if "ordinal_lexicons" in data:
            kwargs["ordinal_lexicons"] = tuple(
                tuple(str(tok) for tok in lex) for lex in data["ordinal_lexicons"]
            )
        return cls(**kwargs)


@dataclass(frozen=True)
class DataProfile:
    attribute_types: dict[str, ScaleType]
    independent_type: ScaleType | None
    dependent_type: ScaleType | None
    cardinality: CardinalityClass
    dimensionality: Dimensionality


_INT_RE = re.compile(r"[+-]?\d+")
_FLOAT_RE = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")


def parse_cell(raw: str):
    """Type a CSV field: number, then ISO date (YYYY-MM-DD), else text.

    Empty fields become None.
    """
    if raw == "":
        return None
    stripped = raw.strip()
    if _INT_RE.fullmatch(stripped):
        return int(stripped)
    if _FLOAT_RE.fullmatch(stripped):
        return float(stripped)
    if len(stripped) == 10:
        try:
            return datetime.date.fromisoformat(stripped)
        except ValueError:
            pass
    return raw


def load_dataset(path: str | Path, format: str = "csv") -> Dataset:
    """Read an RFC 4180 CSV with a mandatory header row into a Dataset."""
    if format.lower() != "csv":
        raise ValueError(f"unsupported dataset format {format!r}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise MissingHeaderError(f"{path}: file is empty") from None
        if not header or all(name == "" for name in header):
            raise MissingHeaderError(f"{path}: header row is empty")
        width = len(header)
        cells: list[list] = [[] for _ in range(width)]
        for idx, row in enumerate(reader):
            if not row:
                continue  # tolerate blank lines
            if len(row) != width:
                raise RaggedRowsError(idx, width, len(row))
            for i, raw in enumerate(row):
                cells[i].append(parse_cell(raw))
    return Dataset(
        columns=tuple(
            Column(name=name, values=tuple(vals)) for name, vals in zip(header, cells)
        )
    )


def infer_column_type(
    values,
    override: ScaleType | None = None,
    config: ProfilerConfig | None = None,
) -> ScaleType:
    """Assign a scale type to a column.

    An explicit override always wins. Otherwise: a token list drawn from an
    ordinal lexicon is Ordinal; numeric data is Interval when negatives bar a
    non-arbitrary zero, Ratio when all values are >= 0; dates are Interval;
    everything else is Nominal.
    """
    if override is not None:
        return override
    config = config or ProfilerConfig()
    present = [v for v in values if v is not None]
    if not present:
        raise AllNullColumnError("cannot infer a type from an all-null column")

    tokens = {str(v).strip().casefold() for v in present}
    for lexicon in config.ordinal_lexicons:
        if tokens <= {tok.casefold() for tok in lexicon}:
            return ScaleType.ORDINAL

    if all(isinstance(v, (int, float)) for v in present):
        if any(v < 0 for v in present):
            return ScaleType.INTERVAL
        return ScaleType.RATIO

    if all(isinstance(v, datetime.date) for v in present):
        return ScaleType.INTERVAL

    return ScaleType.NOMINAL


def classify_cardinality(
    distinct_counts, config: ProfilerConfig | None = None
) -> CardinalityClass:
    """Low iff the largest distinct-value count is strictly below the threshold."""
    config = config or ProfilerConfig()
    counts = list(distinct_counts)
    if not counts:
        raise EmptySelectionError("no attributes selected")
    if any(c < 1 for c in counts):
        raise ValueError("distinct counts must be >= 1")
    max_distinct = max(counts)
    kind = (
        CardinalityKind.LOW
        if max_distinct < config.cardinality_threshold
        else CardinalityKind.HIGH
    )
    return CardinalityClass(kind=kind, max_distinct=max_distinct)


def classify_dimensionality(
    selected_attribute_count: int, shape: SourceShape
) -> Dimensionality:
    """Tree/graph declarations map directly; flat selections go by attribute count."""
    if isinstance(shape, TreeShape):
        return Dimensionality.TREE
    if isinstance(shape, GraphShape):
        return Dimensionality.GRAPH
    if selected_attribute_count < 1:
        raise ZeroAttributesError("a flat selection needs at least one attribute")
    if selected_attribute_count == 1:
        return Dimensionality.ONE_DIMENSIONAL
    if selected_attribute_count == 2:
        return Dimensionality.TWO_DIMENSIONAL
    return Dimensionality.N_DIMENSIONAL


_DOMINANCE = {
    ScaleType.NOMINAL: 0,
    ScaleType.ORDINAL: 1,
    ScaleType.INTERVAL: 2,
    ScaleType.RATIO: 3,
}


def dominant_type(types) -> ScaleType | None:
    """Least-informative scale wins: Nominal > Ordinal > Interval > Ratio."""
    types = list(types)
    if not types:
        return None
    return min(types, key=lambda t: _DOMINANCE[t])


def _distinct_count(column: Column) -> int:
    return len({v for v in column.values if v is not None})


def scale_override(source: DatasourceResource, name: str) -> ScaleType | None:
    raw = source.type_overrides.get(name)
    return None if raw is None else ScaleType(raw)


def profile_source(
    dataset: Dataset,
    source: DatasourceResource,
    config: ProfilerConfig | None = None,
) -> DataProfile:
    """Profile the attributes a source selects from a dataset.

    Cardinality counts distinct values of the category attributes (the items
    a chart must lay out); a category-free selection falls back to the
    measures so the class is always defined.
    """
    config = config or ProfilerConfig()
    selected = list(source.categories) + list(source.measures)
    for name in selected:
        if name not in dataset.column_names:
            raise UnknownAttributeError(f"selected attribute {name!r} is not a dataset column")
    shape = source.shape
    shape_columns = ()
    if isinstance(shape, TreeShape):
        shape_columns = (shape.parent_column, shape.id_column)
    elif isinstance(shape, GraphShape):
        shape_columns = (shape.source_column, shape.target_column)
    for name in shape_columns:
        if name not in dataset.column_names:
            raise UnknownAttributeError(f"shape column {name!r} is not a dataset column")
    if not selected:
        raise EmptySelectionError("source selects no categories or measures")

    attribute_types = {
        name: infer_column_type(
            dataset.column(name).values, scale_override(source, name), config
        )
        for name in selected
    }
    independent = dominant_type(attribute_types[c] for c in source.categories)
    dependent = dominant_type(attribute_types[m] for m in source.measures)

    counted = source.categories if source.categories else source.measures
    cardinality = classify_cardinality(
        [_distinct_count(dataset.column(name)) for name in counted], config
    )
    dimensionality = classify_dimensionality(len(selected), shape)
    return DataProfile(
        attribute_types=attribute_types,
        independent_type=independent,
        dependent_type=dependent,
        cardinality=cardinality,
        dimensionality=dimensionality,
    )
