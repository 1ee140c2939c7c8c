"""Tests for the program/machine correctness check."""

import pytest

from eventsync.machine import (
    compile_program,
    enumerate_programs,
    explore,
    program_graph,
    verify_theorem,
)
from eventsync.machine.bisimulation import Clause
from eventsync.models.machine import RuleLabel
from eventsync.progdsl import parse_program


def test_worked_example_holds(example_program):
    report = verify_theorem(example_program)
    assert report.holds
    assert report.correspondence and report.safety and report.progress
    assert report.failed_clause is None
    assert report.terminal_denotations == ["{x,!x,z,!z}", "{y,!y}"]


def test_worked_example_program_graph(example_program):
    graph = program_graph(example_program)
    # start, three one-step reducts, and the x-and-z reduct reached two ways
    assert graph.number_of_nodes() == 5
    assert graph.out_degree(example_program.normalized()) == 3
    assert {rule for _, _, rule in graph.edges(data="rule")} == {RuleLabel.SRC}


@pytest.mark.parametrize(
    "text",
    [
        "x | !x",
        "select(x) | select(z)",
        "select(x) | select(!x)",
        "select(x,!x)",
        "select(x,y) | select(!x) | select(!y)",
    ],
)
def test_small_programs_hold(text):
    report = verify_theorem(parse_program(text))
    assert report.holds, report


def test_reuses_explored_graph(example_program):
    reach = explore(compile_program(example_program))
    report = verify_theorem(example_program, reach=reach)
    assert report.holds
    assert report.machine_states == len(reach)
    assert report.machine_edges == reach.graph.number_of_edges()


def test_progress_fails_when_machine_cannot_follow():
    # The machine of select(x) alone never releases anything
    program = parse_program("select(x) | select(!x)")
    unrelated = explore(compile_program(parse_program("select(x)")))
    report = verify_theorem(program, reach=unrelated)
    assert not report.holds
    assert report.correspondence
    assert report.failed_clause == Clause.PROGRESS
    assert not report.progress


def test_correspondence_fails_on_wrong_denotation():
    program = parse_program("x")
    unrelated = explore(compile_program(parse_program("select(x)")))
    report = verify_theorem(program, reach=unrelated)
    assert not report.holds
    assert report.failed_clause == Clause.CORRESPONDENCE
    assert not report.correspondence


def test_small_family_holds():
    for program in enumerate_programs(max_channels=2, max_procs=3, max_width=2, limit=80):
        report = verify_theorem(program)
        assert report.holds, f"{program}: failed {report.failed_clause}"


@pytest.mark.slow
def test_full_family_holds():
    failures = []
    for program in enumerate_programs(max_channels=3, max_procs=4, max_width=2):
        report = verify_theorem(program)
        if not report.holds:
            failures.append((str(program), report.failed_clause))
    assert failures == []
