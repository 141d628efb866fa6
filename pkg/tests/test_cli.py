"""Command line interface: the init/derive/refine/validate/render flow and
the documented exit codes (0 success, 1 domain diagnostics, 2 I/O errors)."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from conftest import DATASETS, GOALS_TEXT, REFINE_OPS
from goalviz.cli import main
from goalviz.requirements import parse_goal_model
from goalviz.requirements.model import VisGoal
from goalviz.vismodel import encode_ops

VIS = "unpaid-bills-by-type"


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def inputs(tmp_path):
    goals = tmp_path / "bills.goals"
    goals.write_text(GOALS_TEXT, encoding="utf-8")
    data = []
    for name, text in DATASETS.items():
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        data.append(path)
    return goals, data


@pytest.fixture
def project_dir(runner, inputs, tmp_path):
    goals, data = inputs
    args = ["init", str(tmp_path / "bills"), "--goals", str(goals)]
    for path in data:
        args += ["--data", str(path)]
    result = runner.invoke(main, args)
    assert result.exit_code == 0, result.output + result.stderr
    return tmp_path / "bills"


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert "goalviz" in result.output


def test_init_lists_the_visualizations(runner, inputs, tmp_path):
    goals, data = inputs
    args = ["init", str(tmp_path / "bills"), "--goals", str(goals)]
    for path in data:
        args += ["--data", str(path)]
    result = runner.invoke(main, args)
    assert result.exit_code == 0
    assert "initialized project 'bills' with 4 visualization(s)" in result.output
    assert f"{VIS}: Unpaid bills by type" in result.output


def test_init_needs_a_goals_source(runner, tmp_path):
    result = runner.invoke(main, ["init", str(tmp_path / "p")])
    assert result.exit_code == 2
    assert "provide --goals FILE or use --interactive" in result.stderr


def test_init_reports_goal_diagnostics(runner, tmp_path):
    bad = tmp_path / "bad.goals"
    bad.write_text('actor "A" Lay\n', encoding="utf-8")
    result = runner.invoke(main, ["init", str(tmp_path / "p"), "--goals", str(bad)])
    assert result.exit_code == 1
    assert result.stderr.strip()
    assert not (tmp_path / "p").exists()


def test_derive_reports_selection_and_spec(runner, project_dir):
    result = runner.invoke(main, ["derive", str(project_dir), VIS])
    assert result.exit_code == 0, result.output + result.stderr
    assert f"{VIS}: StackedColumnChart (rule R5)" in result.output
    assert "goals: Composition, Comparison" in result.output
    assert "user: Lay" in result.output
    assert "dimensionality: NDimensional" in result.output
    assert "cardinality: Low" in result.output
    assert "independent type: Nominal" in result.output
    assert "dependent type: Ratio" in result.output
    assert "model version:" in result.output


def test_derive_without_argument_covers_every_visualization(runner, project_dir):
    result = runner.invoke(main, ["derive", str(project_dir)])
    assert result.exit_code == 0, result.output + result.stderr
    assert f"{VIS}: StackedColumnChart (rule R5)" in result.output
    assert "unpaid-bills-by-place: ChoroplethMap (rule R3)" in result.output
    assert "unpaid-bills-by-payer: ColumnChart (rule R6)" in result.output
    assert "unpaid-bills-over-time: LineChart (rule R7b)" in result.output


def test_refine_applies_an_ops_file(runner, project_dir, tmp_path):
    runner.invoke(main, ["derive", str(project_dir), VIS])
    ops_file = tmp_path / "ops.json"
    ops_file.write_text(encode_ops(REFINE_OPS), encoding="utf-8")
    result = runner.invoke(
        main, ["refine", str(project_dir), VIS, "--ops", str(ops_file)]
    )
    assert result.exit_code == 0, result.output + result.stderr
    assert "applied 3 op(s); model version " in result.output


def test_render_writes_artifacts(runner, project_dir):
    runner.invoke(main, ["derive", str(project_dir), VIS])
    result = runner.invoke(main, ["render", str(project_dir), VIS])
    assert result.exit_code == 0, result.output + result.stderr
    assert f"out/{VIS}.chartdoc.json" in result.output
    assert f"out/{VIS}.html" in result.output
    assert (project_dir / "out" / f"{VIS}.html").is_file()


def test_validate_success_exits_zero(runner, project_dir, tmp_path):
    runner.invoke(main, ["derive", str(project_dir), VIS])
    answers = tmp_path / "answers.json"
    answers.write_text(
        json.dumps({"Composition": "yes", "Comparison": True}), encoding="utf-8"
    )
    result = runner.invoke(
        main, ["validate", str(project_dir), VIS, "--answers", str(answers)]
    )
    assert result.exit_code == 0, result.output + result.stderr
    assert f"{VIS}: validated" in result.output


def test_validate_failure_exits_one(runner, project_dir, tmp_path):
    runner.invoke(main, ["derive", str(project_dir), VIS])
    answers = tmp_path / "answers.json"
    answers.write_text(
        json.dumps({"Composition": "yes", "Comparison": "no"}), encoding="utf-8"
    )
    result = runner.invoke(
        main, ["validate", str(project_dir), VIS, "--answers", str(answers)]
    )
    assert result.exit_code == 1
    assert f"{VIS}: requires revision (failed goals: Comparison)" in result.output


def test_missing_dataset_exits_two(runner, inputs, tmp_path):
    goals, _data = inputs
    result = runner.invoke(
        main, ["init", str(tmp_path / "nodata"), "--goals", str(goals)]
    )
    assert result.exit_code == 0
    result = runner.invoke(main, ["derive", str(tmp_path / "nodata"), VIS])
    assert result.exit_code == 2
    assert "error in stage profiling" in result.stderr


def test_unknown_visualization_exits_one(runner, project_dir):
    result = runner.invoke(main, ["derive", str(project_dir), "no-such-vis"])
    assert result.exit_code == 1
    assert "unknown visualization" in result.stderr


def test_rules_prints_the_decision_table(runner):
    result = runner.invoke(main, ["rules"])
    assert result.exit_code == 0
    assert "top to bottom" in result.output
    for rule_id in ("R1", "R5", "R12"):
        assert rule_id in result.output


def test_rules_export_writes_a_file(runner, tmp_path):
    target = tmp_path / "rules.txt"
    result = runner.invoke(main, ["rules", "--export", str(target)])
    assert result.exit_code == 0
    assert str(target) in result.output
    assert "R12" in target.read_text(encoding="utf-8")


def test_model_prints_the_current_model(runner, project_dir):
    runner.invoke(main, ["derive", str(project_dir), VIS])
    result = runner.invoke(main, ["model", str(project_dir), VIS])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["graphic_type"] == "stacked_column_chart"
    assert "version: " in result.stderr


def test_model_before_derivation_exits_one(runner, project_dir):
    result = runner.invoke(main, ["model", str(project_dir), VIS])
    assert result.exit_code == 1
    assert f"{VIS} has no derived model" in result.stderr


def test_check_summarizes_a_goals_file(runner, inputs):
    goals, _data = inputs
    result = runner.invoke(main, ["check", str(goals)])
    assert result.exit_code == 0
    assert "ok: actor 'City councillor' (Lay), 4 visualization(s)" in result.output
    assert f"{VIS}: Identify the type of unpaid bills" in result.output


def test_check_reports_diagnostics(runner, tmp_path):
    bad = tmp_path / "bad.goals"
    bad.write_text('actor "A" Lay\nprocess ""\n', encoding="utf-8")
    result = runner.invoke(main, ["check", str(bad)])
    assert result.exit_code == 1
    assert result.stderr.strip()


def test_interactive_init_scaffolds_a_goals_file(runner, tmp_path):
    answers = "\n".join(
        [
            "City councillor",
            "",  # Lay (default)
            "Unpaid bill management",
            "Reduce unpaid bills",
            "",  # Descriptive (default)
            "Prioritize collection actions",
            "Identify the type of unpaid bills",
            "Unpaid bills by type",
            "Composition, Comparison",
            "",  # Overview (default)
            "bills.csv",
            "Type, Province",
            "Amount",
        ]
    )
    result = runner.invoke(
        main,
        ["init", str(tmp_path / "scaffolded"), "--interactive"],
        input=answers + "\n",
    )
    assert result.exit_code == 0, result.output + result.stderr
    assert "initialized project 'scaffolded' with 1 visualization(s)" in result.output
    text = (tmp_path / "scaffolded" / "model.goals").read_text(encoding="utf-8")
    model = parse_goal_model(text)
    ((_info, requirement),) = model.visualizations()
    assert requirement.name == "Unpaid bills by type"
    assert requirement.goals == (VisGoal.COMPOSITION, VisGoal.COMPARISON)
    assert requirement.sources[0].categories == ("Type", "Province")
    assert requirement.sources[0].measures == ("Amount",)
