import { describe, expect, it } from "vitest";

import {
  formatDimensionality,
  formatList,
  specCoordinates,
  titleFromSnake,
} from "../src/format.js";
import type { SpecPayload } from "../src/types.js";

describe("titleFromSnake", () => {
  it("capitalizes each word", () => {
    expect(titleFromSnake("stacked_column_chart")).toBe("Stacked Column Chart");
    expect(titleFromSnake("heatmap")).toBe("Heatmap");
    expect(titleFromSnake("single_value_card")).toBe("Single Value Card");
  });

  it("keeps minor words lowercase past the first position", () => {
    expect(titleFromSnake("details_on_demand")).toBe("Details on Demand");
    expect(titleFromSnake("on_demand")).toBe("On Demand");
  });

  it("tolerates empty segments", () => {
    expect(titleFromSnake("")).toBe("");
    expect(titleFromSnake("__x__")).toBe("X");
  });
});

describe("formatDimensionality", () => {
  it("reads as an adjective", () => {
    expect(formatDimensionality("n_dimensional")).toBe("n-dimensional");
    expect(formatDimensionality("two_dimensional")).toBe("two-dimensional");
    expect(formatDimensionality("tree")).toBe("tree");
  });
});

describe("specCoordinates", () => {
  const spec: SpecPayload = {
    goals: ["composition", "comparison"],
    interaction: ["overview"],
    user: "lay",
    dimensionality: "n_dimensional",
    cardinality: "low",
    independent_type: "nominal",
    dependent_type: "ratio",
  };

  it("renders all seven coordinates in order", () => {
    expect(specCoordinates(spec)).toEqual([
      { label: "Goals", value: "Composition, Comparison" },
      { label: "Interaction", value: "Overview" },
      { label: "User", value: "Lay" },
      { label: "Dimensionality", value: "n-dimensional" },
      { label: "Cardinality", value: "Low" },
      { label: "Independent type", value: "Nominal" },
      { label: "Dependent type", value: "Ratio" },
    ]);
  });

  it("shows absent scale types as absent", () => {
    const rows = specCoordinates({
      ...spec,
      independent_type: null,
      dependent_type: null,
    });
    expect(rows[5]).toEqual({ label: "Independent type", value: "absent" });
    expect(rows[6]).toEqual({ label: "Dependent type", value: "absent" });
  });
});

describe("formatList", () => {
  it("joins formatted items", () => {
    expect(formatList(["order", "details_on_demand"])).toBe(
      "Order, Details on Demand",
    );
    expect(formatList([])).toBe("");
  });
});
