"""Shared fixtures: a small municipal unpaid-bills project exercised by most
of the suite, plus in-memory shortcuts for its first visualization."""

from __future__ import annotations

from types import SimpleNamespace

import pytest
from hypothesis import settings

from goalviz.profiling import load_dataset, profile_source
from goalviz.project import init_project
from goalviz.requirements import parse_goal_model
from goalviz.transform import assemble_spec, select_rule
from goalviz.transform.derive import derive_visualization
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

settings.register_profile("suite", max_examples=100, deadline=None)
settings.load_profile("suite")


GOALS_TEXT = """\
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
      information "Find where unpaid bills concentrate" {
        visualization "Unpaid bills by place" {
          goals: Geospatial
          interactions: Overview, Zoom
          source "bills.csv" {
            category "Province"
            measure "Amount"
          }
        }
      }
      information "Rank payers by outstanding debt" {
        visualization "Unpaid bills by payer" {
          goals: Order, Comparison
          interactions: Overview, Filter
          source "payers.csv" {
            category "Payer"
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
Income tax,Alicante,2600
Income tax,Castellon,1980
Income tax,Valencia,3400
Business tax,Alicante,1450
Business tax,Castellon,760
Business tax,Valencia,1890
Water tax,Alicante,205
Water tax,Castellon,180
Water tax,Valencia,360
"""

PAYERS_CSV = """\
Payer,Amount
Acme Logistics,4200
Bayside Hotels,3150.75
Coastal Farms,2980
Delta Print,2410
Ebro Foods,2105
Falcon Motors,1890
Grau Clinics,1675.5
Horta Market,1310
Iberic Steel,990
Jardin Events,845
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

DATASETS = {
    "bills.csv": BILLS_CSV,
    "payers.csv": PAYERS_CSV,
    "monthly.csv": MONTHLY_CSV,
}

# The refinement a user applies to the derived by-type chart: put Province on
# X (Type swaps onto Color), flip the bars sideways, and pin the legend.
REFINE_OPS = (
    SetChannel(attribute="Province", channel=Channel.X),
    SetOrientation(Orientation.HORIZONTAL),
    SetLegend(Legend(title="Type", type=LegendType.LIST, position=LegendPosition.RIGHT)),
)


@pytest.fixture
def goal_model():
    return parse_goal_model(GOALS_TEXT)


def requirement_named(goal_model, name):
    for _info_goal, requirement in goal_model.visualizations():
        if requirement.name == name:
            return requirement
    raise LookupError(name)


@pytest.fixture
def by_type_requirement(goal_model):
    return requirement_named(goal_model, "Unpaid bills by type")


@pytest.fixture
def bills_dataset(tmp_path):
    path = tmp_path / "bills.csv"
    path.write_text(BILLS_CSV, encoding="utf-8")
    return load_dataset(path)


@pytest.fixture
def by_type(goal_model, by_type_requirement, bills_dataset):
    """The by-type visualization carried through every pipeline stage."""
    profile = profile_source(bills_dataset, by_type_requirement.sources[0])
    spec = assemble_spec(by_type_requirement, goal_model.actor.kind, profile)
    rule = select_rule(spec)
    model = derive_visualization(
        spec, by_type_requirement, rule.graphic, profile.attribute_types
    )
    return SimpleNamespace(
        requirement=by_type_requirement,
        dataset=bills_dataset,
        profile=profile,
        spec=spec,
        rule=rule,
        graphic=rule.graphic,
        model=model,
    )


@pytest.fixture
def sample_project(tmp_path):
    return init_project(
        tmp_path / "bills-project", GOALS_TEXT, dataset_contents=DATASETS
    )
