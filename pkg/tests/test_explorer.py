"""Tests for state-space exploration, export and graph audits."""

import pytest

from eventsync.errors import StateBoundExceeded
from eventsync.machine import (
    check_graph,
    compile_program,
    enumerate_programs,
    explore,
    export_graph,
    state_hash,
)
from eventsync.models.machine import RuleLabel
from eventsync.progdsl import parse_program
from eventsync.utils.constants import ExitCode, STATE_HASH_WIDTH


def reach_of(text, max_states=None):
    return explore(compile_program(parse_program(text)), max_states)


def test_worked_example_terminal_denotations(example_state):
    reach = explore(example_state)
    assert reach.complete
    assert {str(d) for d in reach.terminal_denotations()} == {"{x,!x,z,!z}", "{y,!y}"}
    assert len(reach) < 100_000


def test_worked_example_audit_passes(example_state):
    audit = check_graph(explore(example_state))
    assert audit.ok
    assert audit.states_checked > 0
    assert audit.edges_checked > 0


def test_bare_program_is_a_single_terminal_state():
    reach = reach_of("x | !x")
    assert len(reach) == 1
    assert reach.terminals == [reach.initial]
    assert reach.edges == []


def test_unmatched_selects_are_stuck_immediately():
    reach = reach_of("select(x) | select(z)")
    assert len(reach) == 1
    assert {str(d) for d in reach.terminal_denotations()} == {"{}"}


def test_self_match_loops_back_to_initial_state():
    reach = reach_of("select(x,!x)")
    assert reach.terminals == []
    assert (reach.initial, RuleLabel.IV_II) in {
        (v, label) for _, label, v in reach.edges
    }
    assert check_graph(reach).ok


def test_bound_exceeded_carries_partial_graph(example_state):
    with pytest.raises(StateBoundExceeded) as info:
        explore(example_state, max_states=3)
    assert info.value.bound == 3
    assert info.value.exit_code == ExitCode.STATE_BOUND
    assert not info.value.partial.complete
    assert len(info.value.partial) == 3


def test_bound_must_be_positive(example_state):
    with pytest.raises(ValueError):
        explore(example_state, max_states=0)


def test_export_format():
    reach = reach_of("select(x) | select(!x)")
    lines = export_graph(reach).splitlines()
    initial = state_hash(reach.initial)

    assert lines[0] == f"initial {initial}"
    assert len(initial) == STATE_HASH_WIDTH
    assert f"{initial} -[I]-> " in "\n".join(lines)
    edges = [line for line in lines if " -[" in line]
    assert len(edges) == reach.graph.number_of_edges()
    terminals = [line for line in lines if line.startswith("terminal ")]
    assert len(terminals) == 1
    assert terminals[0].endswith(" {x,!x}")


def test_export_is_deterministic(example_state):
    assert export_graph(explore(example_state)) == export_graph(explore(example_state))


def test_small_family_passes_audit():
    for program in enumerate_programs(max_channels=2, max_procs=3, max_width=2, limit=80):
        audit = check_graph(explore(compile_program(program)))
        assert audit.ok, f"{program}: {audit}"


@pytest.mark.slow
def test_full_family_passes_audit():
    checked = 0
    for program in enumerate_programs(max_channels=3, max_procs=4, max_width=2):
        audit = check_graph(explore(compile_program(program)))
        assert not audit.invariant_violations, f"{program}: {audit.invariant_violations}"
        assert not audit.liveness_failures, f"{program}: {audit.liveness_failures}"
        assert audit.ok, f"{program}: {audit}"
        checked += 1
    assert checked > 0
