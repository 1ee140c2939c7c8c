# ============================================
# EVENTSYNC
# Transition Rules
# ============================================

"""
One-step semantics of source programs and of the abstract machine.

Handles:
- Program reduction (selective communication between two selects)
- Machine rules I through IV.ii
"""

import itertools
import logging
from typing import Dict, Iterator, List, Set, Tuple

from eventsync.config import settings
from eventsync.errors import InvariantViolationError
from eventsync.machine.invariants import check_invariants
from eventsync.machine.state import rewrite
from eventsync.models.machine import (
    CandidateP,
    ChanFree,
    ChanMatch,
    DoneS,
    MachineState,
    PointBound,
    PointId,
    Rejected,
    Released,
    RetryS,
    RuleLabel,
    Selected,
    SyncClosed,
    SyncEntry,
    SyncOpen,
)
from eventsync.models.program import Action, Program, Select

logger = logging.getLogger(__name__)

Step = Tuple[RuleLabel, MachineState]


# ============================================
# SOURCE PROGRAMS
# ============================================

def program_step(program: Program) -> Set[Program]:
    """
    All one-step reducts of a program.

    Two selects offering `c` and `!c` reduce to the bare actions `c` and
    `!c`. Results are normalized, so programs equal up to proc order
    collapse.

    Example:
        >>> program_step(parse_program("select(x) | select(!x)"))
        {Program("x | !x")}
    """
    procs = program.procs
    successors: Set[Program] = set()

    for i, j in itertools.permutations(range(len(procs)), 2):
        receiver, sender = procs[i], procs[j]
        if not (isinstance(receiver, Select) and isinstance(sender, Select)):
            continue

        inputs = {a.channel for a in receiver.actions if not a.is_output}
        outputs = {a.channel for a in sender.actions if a.is_output}
        rest = [procs[k] for k in range(len(procs)) if k not in (i, j)]
        for channel in inputs & outputs:
            reduct = rest + [Action.input(channel), Action.output(channel)]
            successors.add(Program(tuple(reduct)).normalized())

    return successors


# ============================================
# MACHINE RULES
# ============================================

def _rule_match(state: MachineState) -> Iterator[Step]:
    """(I) complementary unmatched points react with a free channel."""
    inputs: Dict[str, List[PointBound]] = {}
    outputs: Dict[str, List[PointBound]] = {}
    for sub in state.subs:
        if isinstance(sub, PointBound):
            side = outputs if sub.action.is_output else inputs
            side.setdefault(sub.action.channel, []).append(sub)

    for channel in sorted(inputs.keys() & outputs.keys()):
        free = ChanFree(channel)
        if not state.has(free):
            continue
        for p, q in itertools.product(inputs[channel], outputs[channel]):
            yield RuleLabel.I, rewrite(
                state,
                remove=[p, q, free],
                add=[CandidateP(p.point), CandidateP(q.point), ChanMatch(channel, p.point, q.point)],
            )


def _rule_decide(state: MachineState) -> Iterator[Step]:
    """(II.i) an open synchronizer selects; (II.ii) a closed one rejects."""
    for sub in state.subs:
        if not isinstance(sub, CandidateP):
            continue
        sync = state.owner.get(sub.point)
        if sync is None:
            continue

        if state.has(SyncOpen(sync)):
            yield RuleLabel.II_I, rewrite(
                state,
                remove=[sub, SyncOpen(sync)],
                add=[SyncClosed(sync), Selected(sync, sub.point)],
            )
        if state.has(SyncClosed(sync)):
            yield RuleLabel.II_II, rewrite(
                state,
                remove=[sub, SyncClosed(sync)],
                add=[SyncClosed(sync), Rejected(sub.point)],
            )


def _rule_confirm(state: MachineState) -> Iterator[Step]:
    """(III.i-iv) the channel confirms or cancels and becomes free."""
    selected: Dict[PointId, Selected] = {}
    rejected: Dict[PointId, Rejected] = {}
    for sub in state.subs:
        if isinstance(sub, Selected):
            selected[sub.point] = sub
        elif isinstance(sub, Rejected):
            rejected[sub.point] = sub

    for match in state.subs:
        if not isinstance(match, ChanMatch):
            continue
        free = ChanFree(match.channel)
        p_sel, q_sel = selected.get(match.p), selected.get(match.q)
        p_rej, q_rej = rejected.get(match.p), rejected.get(match.q)

        if p_sel and q_sel:
            yield RuleLabel.III_I, rewrite(
                state,
                remove=[p_sel, q_sel, match],
                add=[DoneS(p_sel.sync, match.p), DoneS(q_sel.sync, match.q), free],
            )
        if p_sel and q_rej:
            yield RuleLabel.III_II, rewrite(
                state, remove=[p_sel, q_rej, match], add=[RetryS(p_sel.sync), free]
            )
        if p_rej and q_sel:
            yield RuleLabel.III_III, rewrite(
                state, remove=[p_rej, q_sel, match], add=[RetryS(q_sel.sync), free]
            )
        if p_rej and q_rej:
            yield RuleLabel.III_IV, rewrite(state, remove=[p_rej, q_rej, match], add=[free])


def _rule_release(state: MachineState) -> Iterator[Step]:
    """(IV.i) a confirmed point releases its action."""
    for sub in state.subs:
        if isinstance(sub, DoneS):
            action = state.bound_action.get(sub.point)
            if action is not None:
                yield RuleLabel.IV_I, rewrite(state, remove=[sub], add=[Released(action)])


_BUSY = (CandidateP, Selected, Rejected, DoneS)


def _rule_reboot(state: MachineState) -> Iterator[Step]:
    """
    (IV.ii) a canceled synchronizer reboots with fresh points.

    The reboot waits until none of the old points is still in a session,
    consumes the closed marker along with the retry, withdraws the old
    unmatched bindings and retires the old points from the table.
    """
    for sub in state.subs:
        if not isinstance(sub, RetryS):
            continue
        sync = sub.sync
        entry = state.entries.get(sync)
        closed = SyncClosed(sync)
        if entry is None or not state.has(closed):
            continue

        old_points = set(entry.points)
        if any(isinstance(s, _BUSY) and s.point in old_points for s in state.subs):
            continue

        withdrawn = [s for s in state.subs if isinstance(s, PointBound) and s.point in old_points]
        fresh = tuple(
            (PointId(state.next_point + i), action)
            for i, (_, action) in enumerate(entry.bindings)
        )
        table = tuple(
            SyncEntry(sync, fresh) if e.sync == sync else e
            for e in state.table
        )
        yield RuleLabel.IV_II, rewrite(
            state,
            remove=[sub, closed] + withdrawn,
            add=[SyncOpen(sync)] + [PointBound(p, a) for p, a in fresh],
            table=table,
            next_point=state.next_point + len(fresh),
        )


RULES = (_rule_match, _rule_decide, _rule_confirm, _rule_release, _rule_reboot)


def machine_step(state: MachineState) -> Set[Step]:
    """
    Every successor of a machine state by exactly one rule application.

    Args:
        state: Invariant-satisfying machine state

    Returns:
        Set of (rule label, successor state) pairs

    Raises:
        InvariantViolationError: In debug mode, if `state` is malformed
    """
    if settings.debug:
        violations = check_invariants(state)
        if violations:
            raise InvariantViolationError(violations)

    successors: Set[Step] = set()
    for rule in RULES:
        successors.update(rule(state))
    return successors
