"""Tests for the command-line harness: exit codes and report format."""

import io

import pytest
from pydantic import ValidationError

from eventsync.cli import build_parser, config_from_args, main
from eventsync.schemas.cli import CliConfig
from eventsync.utils.constants import ExitCode

from tests.conftest import EXAMPLE_PROGRAM


def report_of(text):
    """Parse key: value report lines into a dict."""
    pairs = (line.split(": ", 1) for line in text.splitlines() if ": " in line)
    return {key: value for key, value in pairs}


# ============================================
# MODELCHECK
# ============================================

def test_modelcheck_worked_example(capsys):
    assert main(["modelcheck", "-e", EXAMPLE_PROGRAM]) == ExitCode.OK
    report = report_of(capsys.readouterr().out)
    assert report["terminal_denotations"] == "{x,!x,z,!z} {y,!y}"
    assert report["correspondence"] == report["safety"] == report["progress"] == "pass"
    assert report["invariants"] == "pass"
    assert report["verdict"] == "pass"


@pytest.mark.parametrize("program", ["x | !x", "select(x) | select(z)"])
def test_modelcheck_trivial_programs_pass(program, capsys):
    assert main(["modelcheck", "--expr", program]) == ExitCode.OK
    assert report_of(capsys.readouterr().out)["verdict"] == "pass"


def test_modelcheck_reads_file(tmp_path, capsys):
    source = tmp_path / "program.txt"
    source.write_text("select(x) | select(!x)\n", encoding="utf-8")
    assert main(["modelcheck", str(source)]) == ExitCode.OK
    assert report_of(capsys.readouterr().out)["terminal_denotations"] == "{x,!x}"


def test_modelcheck_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("x | !x"))
    assert main(["modelcheck", "-"]) == ExitCode.OK
    assert report_of(capsys.readouterr().out)["program"] == "x | !x"


def test_modelcheck_writes_graph(tmp_path, capsys):
    graph = tmp_path / "reach.txt"
    assert main(["modelcheck", "-e", "select(x) | select(!x)", "--graph", str(graph)]) == ExitCode.OK
    assert graph.read_text(encoding="utf-8").startswith("initial ")
    assert report_of(capsys.readouterr().out)["graph_file"] == str(graph)


def test_modelcheck_parse_error_exit_code(capsys):
    assert main(["modelcheck", "-e", "select(x"]) == ExitCode.PARSE_ERROR
    err = capsys.readouterr().err
    assert "error: PARSE_ERROR" in err
    assert "position: 8" in err


def test_modelcheck_state_bound_exit_code(capsys):
    assert main(["modelcheck", "--max-states", "2", "-e", EXAMPLE_PROGRAM]) == ExitCode.STATE_BOUND
    assert "error: STATE_BOUND" in capsys.readouterr().err


def test_modelcheck_invalid_bound(capsys):
    assert main(["modelcheck", "--max-states", "0", "-e", "x"]) == ExitCode.PARSE_ERROR
    assert "error: VALIDATION_ERROR" in capsys.readouterr().err


def test_modelcheck_file_and_expr_conflict(tmp_path):
    source = tmp_path / "p.txt"
    source.write_text("x", encoding="utf-8")
    assert main(["modelcheck", "-e", "x", str(source)]) == ExitCode.PARSE_ERROR


def test_modelcheck_missing_file(tmp_path, capsys):
    assert main(["modelcheck", str(tmp_path / "missing.txt")]) == ExitCode.PARSE_ERROR
    assert "error: CONFIG_ERROR" in capsys.readouterr().err


def test_report_ends_with_timestamp(capsys):
    main(["modelcheck", "-e", "x | !x"])
    last = capsys.readouterr().out.splitlines()[-1]
    assert last.startswith("timestamp: ")


# ============================================
# DEMO AND STRESS
# ============================================

def test_demo_passes(capsys):
    assert main(["demo", "--seed", "3"]) == ExitCode.OK
    report = report_of(capsys.readouterr().out)
    assert report["seed"] == "3"
    assert report["verdict"] == "pass"
    assert report["scenarios.guard_counting.status"] == "pass"


def test_demo_zero_timeout_fails(capsys):
    assert main(["demo", "--timeout", "0"]) == ExitCode.FAILURE
    report = report_of(capsys.readouterr().out)
    assert report["scenarios.rendezvous.status"] == "timeout"


def test_stress_small_run(capsys):
    assert main(["stress", "--tasks", "20", "--channels", "4", "--seed", "9"]) == ExitCode.OK
    report = report_of(capsys.readouterr().out)
    assert report["seed"] == "9"
    assert report["completed"] == "20"
    assert report["values_match"] == "true"


def test_stress_guarded_choose(capsys):
    argv = ["stress", "--tasks", "20", "--channels", "4", "--guarded", "--mode", "choose"]
    assert main(argv) == ExitCode.OK
    report = report_of(capsys.readouterr().out)
    assert report["guarded"] == "true"
    assert report["mode"] == "choose"


def test_stress_odd_tasks_rejected(capsys):
    assert main(["stress", "--tasks", "3"]) == ExitCode.PARSE_ERROR
    assert "tasks" in capsys.readouterr().err


def test_unknown_mode_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["stress", "--mode", "random"])
    assert info.value.code == 2


# ============================================
# CONFIGURATION
# ============================================

def test_config_from_args_sets_verbosity():
    args = build_parser().parse_args(["-q", "demo"])
    cfg = config_from_args(args)
    assert cfg.verbosity == -1
    assert cfg.subcommand == "demo"


def test_cli_config_validation():
    with pytest.raises(ValidationError):
        CliConfig(subcommand="explode")
    with pytest.raises(ValidationError):
        CliConfig(subcommand="stress", timeout_ms=-1)
    assert CliConfig(subcommand="demo", timeout_ms=0).timeout_ms == 0
