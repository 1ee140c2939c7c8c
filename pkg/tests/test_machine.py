"""Tests for compilation, rules, invariants, canonical forms and program families."""

import random

import pytest

from eventsync.errors import InvariantViolationError
from eventsync.machine import (
    canonicalize,
    check_invariants,
    compile_program,
    denote_program,
    denote_state,
    enumerate_programs,
    explore,
    machine_step,
    program_step,
)
from eventsync.machine.state import rewrite
from eventsync.models.machine import (
    CandidateP,
    ChanFree,
    ChanMatch,
    Denotation,
    MachineState,
    PointBound,
    PointId,
    RuleLabel,
    SyncEntry,
    SyncId,
    SyncOpen,
    sort_subs,
)
from eventsync.models.program import Action
from eventsync.progdsl import parse_program


def compiled(text):
    return compile_program(parse_program(text))


# ============================================
# COMPILATION AND DENOTATION
# ============================================

def test_compile_single_select():
    state = compiled("select(!z)")
    assert str(state) == "p0↦!z | ⊙z | □s0"
    assert len(state.table) == 1
    assert state.table[0].bindings == ((0, Action.output("z")),)
    assert state.next_point == 1


def test_compile_bare_actions_are_released():
    state = compiled("x | !x")
    assert state.table == ()
    assert str(denote_state(state)) == "{x,!x}"


def test_compile_gives_one_synchronizer_per_select(example_state):
    assert len(example_state.table) == 4
    assert example_state.next_point == 6
    assert sum(isinstance(s, SyncOpen) for s in example_state.subs) == 4
    assert check_invariants(example_state) == []


def test_denote_program_counts_bare_actions_only():
    program = parse_program("x | !x | x | select(y)")
    assert denote_program(program) == Denotation.of(
        [Action.input("x"), Action.input("x"), Action.output("x")]
    )
    assert str(denote_program(program)) == "{x,x,!x}"


# ============================================
# PROGRAM STEPS
# ============================================

def test_program_step_reduces_complementary_selects():
    successors = program_step(parse_program("select(x) | select(!x)"))
    assert successors == {parse_program("x | !x").normalized()}


def test_program_step_of_worked_example(example_program):
    successors = program_step(example_program)
    assert successors == {
        parse_program("x | !x | select(y,z) | select(!z)").normalized(),
        parse_program("y | !y | select(!z) | select(x)").normalized(),
        parse_program("z | !z | select(!x,!y) | select(x)").normalized(),
    }


@pytest.mark.parametrize("text", ["x | !x", "select(x) | select(z)", "select(x,!x)"])
def test_program_step_without_redex(text):
    assert program_step(parse_program(text)) == set()


# ============================================
# MACHINE STEPS
# ============================================

def test_first_machine_step_is_a_match():
    state = compiled("select(x) | select(!x)")
    steps = machine_step(state)
    assert len(steps) == 1
    ((label, successor),) = steps
    assert label is RuleLabel.I
    assert successor.has(ChanMatch("x", 0, 1))
    assert successor.has(CandidateP(0)) and successor.has(CandidateP(1))
    assert not successor.has(ChanFree("x"))


def test_rendezvous_releases_both_actions():
    state = compiled("select(x) | select(!x)")
    labels = []
    while True:
        steps = sorted(machine_step(state), key=lambda step: step[0].value)
        if not steps:
            break
        label, state = steps[0]
        labels.append(label)
        assert check_invariants(state) == []

    assert str(state.denotation()) == "{x,!x}"
    assert labels[0] is RuleLabel.I
    assert labels.count(RuleLabel.IV_I) == 2
    assert RuleLabel.III_I in labels


def test_self_match_cancels_and_reboots():
    state = compiled("select(x,!x)")
    seen = set()
    frontier = [state]
    while frontier:
        current = frontier.pop()
        for label, successor in machine_step(current):
            seen.add(label)
            if label is not RuleLabel.IV_II:
                frontier.append(successor)
            else:
                assert successor.next_point == 4
                assert {s.point for s in successor.subs if isinstance(s, PointBound)} == {2, 3}
                assert check_invariants(successor) == []

    assert RuleLabel.IV_II in seen
    assert RuleLabel.III_I not in seen
    assert RuleLabel.IV_I not in seen


def test_rewrite_requires_present_substates():
    state = compiled("select(x)")
    with pytest.raises(ValueError):
        rewrite(state, remove=[ChanFree("y")], add=[])


# ============================================
# INVARIANTS
# ============================================

def test_duplicate_channel_marker_is_a_violation():
    state = compiled("select(x) | select(!x)")
    broken = rewrite(state, remove=[], add=[ChanFree("x")])
    violations = check_invariants(broken)
    assert [v.condition for v in violations] == [2]
    assert "channel x" in str(violations[0])


def test_orphan_candidate_is_a_violation():
    state = compiled("select(x)")
    broken = rewrite(state, remove=[], add=[CandidateP(7)])
    conditions = {v.condition for v in check_invariants(broken)}
    assert 1 in conditions
    assert 4 in conditions


def test_debug_mode_checks_invariants_on_step(debug_mode):
    state = compiled("select(x) | select(!x)")
    broken = rewrite(state, remove=[SyncOpen(0)], add=[])
    with pytest.raises(InvariantViolationError) as info:
        machine_step(broken)
    assert info.value.error_code == "INVARIANT_VIOLATION"


# ============================================
# CANONICAL FORMS
# ============================================

def test_canonical_form_ignores_proc_order():
    left = compiled("select(x) | select(!x,y) | select(!y)")
    right = compiled("select(!y) | select(!x,y) | select(x)")
    assert left != right
    assert canonicalize(left) == canonicalize(right)


def test_canonical_form_distinguishes_different_states():
    assert canonicalize(compiled("select(x) | select(!x)")) != canonicalize(compiled("select(x) | select(!y)"))


def test_canonicalize_is_idempotent(example_state):
    once = canonicalize(example_state)
    assert canonicalize(once) == once


def _randomly_renamed(state: MachineState, rng: random.Random) -> MachineState:
    """Same state under a random bijection of point and synchronizer ids."""
    points = [p for entry in state.table for p in entry.points]
    syncs = [entry.sync for entry in state.table]
    pm = dict(zip(points, map(PointId, rng.sample(range(100, 1000), len(points)))))
    sm = dict(zip(syncs, map(SyncId, rng.sample(range(100, 1000), len(syncs)))))
    table = [
        SyncEntry(sm[entry.sync], tuple((pm[p], a) for p, a in entry.bindings))
        for entry in state.table
    ]
    rng.shuffle(table)
    return MachineState(
        subs=sort_subs(sub.renamed(pm, sm) for sub in state.subs),
        table=tuple(table),
        channels=state.channels,
        next_point=max(pm.values(), default=0) + 1,
    )


def _check_renamings(states, rng: random.Random) -> None:
    for state in states:
        renamed = _randomly_renamed(state, rng)
        assert canonicalize(renamed) == canonicalize(state), str(state)


def test_canonical_form_survives_random_renaming(example_state):
    rng = random.Random(11)
    states = explore(example_state).states
    _check_renamings(rng.sample(states, min(200, len(states))), rng)


def test_canonical_form_survives_random_renaming_across_family():
    rng = random.Random(12)
    for program in enumerate_programs(max_channels=2, max_procs=3, max_width=2, limit=30):
        _check_renamings(explore(compile_program(program)).states, rng)


# ============================================
# PROGRAM FAMILIES
# ============================================

def test_compiled_state_denotes_the_program():
    for program in enumerate_programs(max_channels=3, max_procs=4, max_width=2, limit=500):
        assert denote_state(compile_program(program)) == denote_program(program), str(program)


@pytest.mark.slow
def test_compiled_state_denotes_the_program_across_full_family():
    for program in enumerate_programs(max_channels=3, max_procs=4, max_width=2):
        assert denote_state(compile_program(program)) == denote_program(program), str(program)


def test_single_channel_family():
    programs = list(enumerate_programs(max_channels=1, max_procs=2, max_width=1))
    # x, !x, select(x), select(!x) alone, and the 10 unordered pairs
    assert len(programs) == 14
    assert len(set(programs)) == 14


def test_family_is_up_to_channel_renaming():
    programs = list(enumerate_programs(max_channels=2, max_procs=1, max_width=1))
    assert [str(p) for p in programs] == ["x", "!x", "select(x)", "select(!x)"]


def test_family_limit_and_selects_only():
    programs = list(enumerate_programs(2, 3, 2, bare=False, limit=5))
    assert len(programs) == 5
    assert all(not isinstance(proc, Action) for p in programs for proc in p.procs)
