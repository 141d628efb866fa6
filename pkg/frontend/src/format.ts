/** Display formatting for wire-format identifiers. */

import type { SpecPayload } from "./types.js";

const MINOR_WORDS = new Set(["a", "an", "and", "by", "of", "on", "the", "to"]);

/** "stacked_column_chart" -> "Stacked Column Chart"; minor words stay
 * lowercase past the first position ("details_on_demand" -> "Details on
 * Demand"). */
export function titleFromSnake(name: string): string {
  return name
    .split("_")
    .filter((word) => word.length > 0)
    .map((word, index) =>
      index > 0 && MINOR_WORDS.has(word)
        ? word
        : word.charAt(0).toUpperCase() + word.slice(1),
    )
    .join(" ");
}

/** Dimensionality reads as an adjective: "n_dimensional" -> "n-dimensional". */
export function formatDimensionality(value: string): string {
  return value.replaceAll("_", "-");
}

export function formatList(values: string[]): string {
  return values.map(titleFromSnake).join(", ");
}

export interface CoordinateRow {
  label: string;
  value: string;
}

/** The seven specification coordinates as label/value display rows. */
export function specCoordinates(spec: SpecPayload): CoordinateRow[] {
  return [
    { label: "Goals", value: formatList(spec.goals) },
    { label: "Interaction", value: formatList(spec.interaction) },
    { label: "User", value: titleFromSnake(spec.user) },
    { label: "Dimensionality", value: formatDimensionality(spec.dimensionality) },
    { label: "Cardinality", value: titleFromSnake(spec.cardinality) },
    {
      label: "Independent type",
      value: spec.independent_type === null ? "absent" : titleFromSnake(spec.independent_type),
    },
    {
      label: "Dependent type",
      value: spec.dependent_type === null ? "absent" : titleFromSnake(spec.dependent_type),
    },
  ];
}
