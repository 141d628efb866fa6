"""Walk the full toolchain on a small municipal unpaid-bills scenario.

Creates a project under ./unpaid-bills-demo, derives a chart for every
declared visualization, refines one of them, runs the validation loop, and
writes the final artifacts. Run with: python3 demos/unpaid_bills.py
"""

from __future__ import annotations

import pathlib
import shutil

from goalviz.project import (
    derive_entry,
    generate_artifacts,
    init_project,
    refine_model,
    validate_and_record,
)
from goalviz.requirements.model import VisGoal, literal
from goalviz.vismodel import (
    Channel,
    Legend,
    LegendPosition,
    LegendType,
    Orientation,
    SetChannel,
    SetLegend,
    SetOrientation,
)

GOALS = """\
actor "City councillor" Lay
process "Unpaid bill management"

strategic "Reduce unpaid bills" {
  analysis Descriptive {
    decision "Prioritize collection actions" {
      information "Identify the type of unpaid bills" {
        visualization "Unpaid bills by type" {
          goals: Composition, Comparison
          interactions: Overview
          source "bills.csv" {
            category "Type"
            category "Province"
            measure "Amount"
          }
        }
      }
      information "Track unpaid bills over the year" {
        visualization "Unpaid bills over time" {
          goals: Trend
          interactions: Overview, DetailsOnDemand
          source "monthly.csv" {
            category "Month"
            measure "Amount"
          }
        }
      }
    }
  }
}
"""

BILLS_CSV = """\
Type,Province,Amount
Vehicle tax,Alicante,1200.5
Vehicle tax,Castellon,640
Vehicle tax,Valencia,2100
Property tax,Alicante,830.25
Property tax,Castellon,910
Property tax,Valencia,1750
Waste tax,Alicante,310
Waste tax,Castellon,295
Waste tax,Valencia,480
"""

MONTHLY_CSV = """\
Month,Amount
January,1030
February,980
March,1125.4
April,1210
May,1170
June,1045
July,990
August,915
September,1200
October,1340.6
November,1425
December,1510
"""


def main() -> None:
    root = pathlib.Path("unpaid-bills-demo")
    if root.exists():
        shutil.rmtree(root)

    print(f"Creating project in {root}/ ...")
    project = init_project(
        root,
        GOALS,
        dataset_contents={"bills.csv": BILLS_CSV, "monthly.csv": MONTHLY_CSV},
    )

    print("\nDeriving visualization models:")
    for vid in project.entries:
        entry = derive_entry(project, vid)
        spec = entry.spec
        print(f"  {vid}: {literal(entry.graphic_type)} via rule {entry.rule_id}")
        print(f"    goals={[literal(g) for g in spec.goals]}, "
              f"dimensionality={literal(spec.dimensionality)}, "
              f"cardinality={literal(spec.cardinality)}")

    vid = "unpaid-bills-by-type"
    print(f"\nRefining {vid}: Province on X, horizontal bars, pinned legend ...")
    entry = refine_model(
        project,
        vid,
        [
            SetChannel(attribute="Province", channel=Channel.X),
            SetOrientation(Orientation.HORIZONTAL),
            SetLegend(
                Legend(title="Type", type=LegendType.LIST, position=LegendPosition.RIGHT)
            ),
        ],
    )
    print(f"  model version is now {entry.model_version}")

    print("\nValidation loop:")
    result, _ = validate_and_record(
        project, vid, {VisGoal.COMPOSITION: True, VisGoal.COMPARISON: False}
    )
    print(f"  first pass: {result.status.value} "
          f"(failed: {[literal(g) for g in result.failed_goals]})")
    result, _ = validate_and_record(
        project, vid, {VisGoal.COMPOSITION: True, VisGoal.COMPARISON: True}
    )
    print(f"  after refinement: {result.status.value}")

    print("\nGenerating artifacts:")
    for out_vid in project.entries:
        for rel_path in generate_artifacts(project, out_vid):
            print(f"  {root / rel_path}")
    print("\nOpen the .html files in a browser; each page is self-contained.")


if __name__ == "__main__":
    main()
