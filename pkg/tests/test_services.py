"""Tests for the model-check, demo and stress services and report rendering."""

import random

import pytest

from eventsync.errors import ProgramSyntaxError, StateBoundExceeded
from eventsync.schemas.report import DemoReport
from eventsync.schemas.scenario import ScenarioResult
from eventsync.services import DemoService, ModelCheckService, StressService
from eventsync.utils.constants import DEMO_SCENARIOS, StressMode, Verdict
from eventsync.utils.formatting import format_value, render_report, report_lines

from tests.conftest import EXAMPLE_PROGRAM


# ============================================
# MODEL CHECK
# ============================================

def test_modelcheck_worked_example():
    report = ModelCheckService.run(EXAMPLE_PROGRAM)
    assert report.verdict == Verdict.PASS
    assert report.terminal_denotations == ["{x,!x,z,!z}", "{y,!y}"]
    assert report.invariants == Verdict.PASS
    assert report.invariant_violations == 0
    assert report.correspondence == report.safety == report.progress == Verdict.PASS
    assert report.program_states == 5
    assert report.states < 100_000


def test_modelcheck_writes_graph(tmp_path):
    path = tmp_path / "reach.txt"
    report = ModelCheckService.run("select(x) | select(!x)", graph_path=str(path))
    assert report.graph_file == str(path)
    text = path.read_text(encoding="utf-8")
    assert text.startswith("initial ")
    assert "terminal " in text


def test_modelcheck_writes_partial_graph_on_bound(tmp_path):
    path = tmp_path / "partial.txt"
    with pytest.raises(StateBoundExceeded):
        ModelCheckService.run(EXAMPLE_PROGRAM, max_states=3, graph_path=str(path))
    assert path.read_text(encoding="utf-8").startswith("initial ")


def test_modelcheck_parse_error():
    with pytest.raises(ProgramSyntaxError):
        ModelCheckService.run("select(")


# ============================================
# DEMO
# ============================================

def test_demo_all_scenarios_pass():
    report = DemoService.run(timeout_ms=5000, seed=0)
    assert report.verdict == Verdict.PASS, report.scenarios
    assert report.passed == len(DEMO_SCENARIOS)
    assert report.failed == 0
    assert sorted(r.name for r in report.scenarios) == sorted(DEMO_SCENARIOS)


def test_demo_zero_timeout_times_out():
    report = DemoService.run(timeout_ms=0, seed=0)
    assert report.verdict == Verdict.FAIL
    assert all(r.status == Verdict.TIMEOUT for r in report.scenarios)


def test_demo_order_is_seeded():
    assert DemoService.scenario_order(5) == DemoService.scenario_order(5)
    assert sorted(DemoService.scenario_order(5)) == sorted(DEMO_SCENARIOS)
    orders = {tuple(DemoService.scenario_order(seed)) for seed in range(20)}
    assert len(orders) > 1


@pytest.mark.parametrize("name", DEMO_SCENARIOS)
def test_each_scenario_passes(name):
    result = DemoService.run_scenario(name, timeout_ms=5000)
    assert result.status == Verdict.PASS, result.detail


# ============================================
# STRESS
# ============================================

@pytest.mark.parametrize("mode", [StressMode.PLAIN, StressMode.CHOOSE])
@pytest.mark.parametrize("use_guard", [False, True])
def test_stress_completes(mode, use_guard):
    report = StressService.run(tasks=40, channels=5, timeout_ms=10_000, seed=1, mode=mode, use_guard=use_guard)
    assert report.verdict == Verdict.PASS
    assert report.completed == 40
    assert report.commits == 20
    assert report.values_match
    assert report.predicate_violations == 0


@pytest.mark.parametrize("use_guard", [False, True])
def test_choose_stress_across_two_channels(use_guard):
    # one span: every pair must agree on which of the two channels commits
    report = StressService.run(tasks=40, channels=2, timeout_ms=10_000, seed=4, mode=StressMode.CHOOSE, use_guard=use_guard)
    assert report.verdict == Verdict.PASS
    assert report.completed == 40
    assert report.commits == 20
    assert report.values_match


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5, 7, 50])
def test_channel_spans_partition_the_pool(size):
    pool = list(range(size))
    spans = StressService.channel_spans(pool, random.Random(size))
    assert sorted(c for span in spans for c in span) == pool
    widths = [len(span) for span in spans]
    if size == 1:
        assert widths == [1]
    else:
        assert all(width in (2, 3) for width in widths)


def test_stress_single_pair():
    report = StressService.run(tasks=2, channels=1, timeout_ms=5000, seed=0)
    assert report.verdict == Verdict.PASS
    assert report.retries == 0


def test_stress_zero_timeout_reports_timeout():
    report = StressService.run(tasks=10, channels=2, timeout_ms=0, seed=0)
    assert report.verdict == Verdict.TIMEOUT


def test_stress_rejects_odd_task_count():
    with pytest.raises(ValueError):
        StressService.build_tasks(tasks=3, channels=1, seed=0)


@pytest.mark.slow
def test_symmetric_choose_stress_repeatedly():
    for seed in range(100):
        report = StressService.run(tasks=200, channels=50, timeout_ms=30_000, seed=seed, mode=StressMode.CHOOSE)
        assert report.verdict == Verdict.PASS, f"seed {seed}: {report.verdict}"


@pytest.mark.slow
def test_default_stress_run():
    assert StressService.run().verdict == Verdict.PASS


# ============================================
# REPORT RENDERING
# ============================================

def test_render_report_uses_dotted_scenario_keys():
    report = DemoReport(
        seed=1,
        timeout_ms=100,
        scenarios=[ScenarioResult(name="rendezvous", status="pass", elapsed_ms="1.00", detail="ok")],
        passed=1,
        failed=0,
        verdict="pass",
        timestamp="2024-01-15T14:30:00+00:00",
    )
    lines = report_lines(report)
    assert "scenarios.rendezvous.status: pass" in lines
    assert "scenarios.rendezvous.detail: ok" in lines
    assert lines[-1] == "timestamp: 2024-01-15T14:30:00+00:00"
    assert render_report(report).endswith("\n")


def test_format_value():
    assert format_value(None) == "-"
    assert format_value(False) == "false"
    assert format_value(["{x,!x}", "{y,!y}"]) == "{x,!x} {y,!y}"
    assert format_value(3) == "3"
